// Shapes of the backend JSON contract (docs/api.md). The UI consumes
// exactly this API and nothing else.

export interface SourceRef {
  record_id: string;
  initiative_title: string;
  stakeholder_group: string;
  organization_name: string | null;
  country: string;
  language: string;
  excerpt: string;
}

export interface RetrievalStats {
  candidates: number;
  after_filter: number;
  after_rerank: number;
}

export interface ApiAnswer {
  overview: string;
  group_insights: Record<string, string[]>;
  recommendations: string[];
  sources: SourceRef[];
  insufficient_evidence: boolean;
  insufficiency_reason: string | null;
  answer_language: string;
  localization_failed: boolean;
  k_used: number;
  retrieval_stats: RetrievalStats;
  timing_ms: number;
}

export interface FiltersResponse {
  whom: string[];
  about: string[];
  countries: string[];
  languages: string[];
}

export interface QueryBody {
  question: string;
  whom?: string[];
  about?: string[];
  k?: number;
  language?: string;
  session_id?: string;
}

export const EU_LANGUAGES = [
  "bg", "hr", "cs", "da", "nl", "en", "et", "fi", "fr", "de", "el", "hu",
  "ga", "it", "lv", "lt", "mt", "pl", "pt", "ro", "sk", "sl", "es", "sv",
] as const;

export type ViewStatus = "idle" | "pending" | "answered" | "refused" | "error";

export interface ViewError {
  message: string;
  requestId: string;
}

export interface ScopeEcho {
  whom: string[];
  about: string[];
  question: string;
}

export interface ViewState {
  status: ViewStatus;
  question: string;
  whom: string[];
  about: string[];
  language: string; // "auto" or an EU code
  filters: FiltersResponse | null;
  filtersError: boolean;
  sessionId: string | null;
  answer: ApiAnswer | null;
  scope: ScopeEcho | null; // what the last answer actually queried
  error: ViewError | null;
}

export function initialViewState(defaultLanguage = "auto"): ViewState {
  return {
    status: "idle",
    question: "",
    whom: [],
    about: [],
    language: defaultLanguage,
    filters: null,
    filtersError: false,
    sessionId: null,
    answer: null,
    scope: null,
    error: null,
  };
}

/** Browser locale intersected with the 24 EU languages; "auto" otherwise. */
export function defaultLanguageFromLocale(locale: string | undefined): string {
  const code = (locale ?? "").slice(0, 2).toLowerCase();
  return (EU_LANGUAGES as readonly string[]).includes(code) ? code : "auto";
}
