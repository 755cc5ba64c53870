import pytest
import yaml

from civicqa.config import load_config
from civicqa.errors import ConfigurationError


def test_defaults_without_file():
    cfg = load_config(None, env={})
    assert cfg.embedding.kind == "local_deterministic"
    assert cfg.embedding.dim == 1536
    assert cfg.generation.kind == "local_extractive"
    assert cfg.retrieval.k == 8
    assert cfg.retrieval.min_score == 0.25
    assert cfg.retrieval.min_hits == 2
    assert cfg.retrieval.country_cap == 2
    assert cfg.retrieval.rerank_target == 6
    assert cfg.retrieval.language_cap == 0  # off by default
    assert cfg.remote_source.parallelism == 4


def test_yaml_file_overrides_defaults(tmp_path):
    path = tmp_path / "config.yaml"
    path.write_text(
        yaml.safe_dump(
            {
                "remote_source": {"base_url": "http://portal.test", "timeout_s": 3.5, "parallelism": 2},
                "embedding": {"dim": 64, "batch_size": 16},
                "retrieval": {"k": 4, "min_score": 0.5},
                "paths": {"corpus": "strange/corpus.jsonl"},
            }
        )
    )
    cfg = load_config(path, env={})
    assert cfg.remote_source.base_url == "http://portal.test"
    assert cfg.remote_source.timeout_s == 3.5
    assert cfg.remote_source.parallelism == 2
    assert cfg.embedding.dim == 64
    assert cfg.retrieval.k == 4
    assert cfg.retrieval.min_score == 0.5
    assert cfg.paths.corpus == "strange/corpus.jsonl"
    # untouched sections keep defaults
    assert cfg.generation.kind == "local_extractive"


def test_env_overrides_win_over_file(tmp_path):
    path = tmp_path / "config.yaml"
    path.write_text(yaml.safe_dump({"embedding": {"dim": 64}, "retrieval": {"k": 4}}))
    env = {
        "CIVICQA_EMBED_DIM": "128",
        "CIVICQA_K": "12",
        "CIVICQA_REMOTE_BASE_URL": "http://env.test",
        "CIVICQA_MIN_SCORE": "0.4",
        "CIVICQA_LANGUAGE_CAP": "3",
    }
    cfg = load_config(path, env=env)
    assert cfg.embedding.dim == 128
    assert cfg.retrieval.k == 12
    assert cfg.retrieval.min_score == 0.4
    assert cfg.retrieval.language_cap == 3
    assert cfg.remote_source.base_url == "http://env.test"


def test_bad_env_value_is_configuration_error():
    with pytest.raises(ConfigurationError):
        load_config(None, env={"CIVICQA_EMBED_DIM": "tall"})


def test_bad_generation_kind_rejected(tmp_path):
    path = tmp_path / "config.yaml"
    path.write_text(yaml.safe_dump({"generation": {"kind": "oracle_bones"}}))
    with pytest.raises(ConfigurationError):
        load_config(path, env={})


def test_non_mapping_root_rejected(tmp_path):
    path = tmp_path / "config.yaml"
    path.write_text("- just\n- a\n- list\n")
    with pytest.raises(ConfigurationError):
        load_config(path, env={})
