// Browser bootstrap: wires the static skeleton in index.html to the
// store/controller and re-renders the dynamic regions on every change.

import { createApiClient } from "./api.js";
import { AppController } from "./controller.js";
import { renderApp, renderFilterControls } from "./render.js";
import { Store } from "./store.js";
import { defaultLanguageFromLocale, initialViewState } from "./types.js";

function mount(): void {
  const searchInput = document.getElementById("question") as HTMLInputElement;
  const form = document.getElementById("search-form") as HTMLFormElement;
  const newChatButton = document.getElementById("new-chat") as HTMLButtonElement;
  const filtersHost = document.getElementById("filters-host") as HTMLElement;
  const contentHost = document.getElementById("content-host") as HTMLElement;

  const store = new Store(
    initialViewState(defaultLanguageFromLocale(navigator.language)),
  );
  const controller = new AppController(createApiClient(fetch.bind(window)), store);

  store.subscribe((state) => {
    filtersHost.innerHTML = renderFilterControls(state);
    contentHost.innerHTML = renderApp(state);
    if (searchInput.value !== state.question) searchInput.value = state.question;
    searchInput.disabled = false; // free-text querying survives filter outages
  });

  form.addEventListener("submit", (event) => {
    event.preventDefault();
    controller.setQuestion(searchInput.value);
    void controller.submit();
  });

  newChatButton.addEventListener("click", () => {
    void controller.newChat();
    searchInput.focus();
  });

  filtersHost.addEventListener("change", (event) => {
    const target = event.target as HTMLInputElement | HTMLSelectElement;
    if (target instanceof HTMLInputElement && target.dataset.filter === "whom") {
      controller.toggleWhom(target.value);
    } else if (target instanceof HTMLInputElement && target.dataset.filter === "about") {
      controller.toggleAbout(target.value);
    } else if (target instanceof HTMLSelectElement) {
      controller.setLanguage(target.value);
    }
  });

  void controller.init();
}

if (typeof document !== "undefined") {
  if (document.readyState === "loading") {
    document.addEventListener("DOMContentLoaded", mount);
  } else {
    mount();
  }
}
