from pathlib import Path

import pytest

from bcpredict import PipelineConfig, parse_wdbc_csv, save_artifact, train_pipeline

ROOT = Path(__file__).resolve().parent.parent
WDBC_PATH = ROOT / "data" / "wdbc.csv"


@pytest.fixture(scope="session")
def wdbc_path() -> Path:
    if not WDBC_PATH.exists():
        pytest.fail(f"{WDBC_PATH} missing; run scripts/make_wdbc_csv.py first")
    return WDBC_PATH


@pytest.fixture(scope="session")
def wdbc(wdbc_path):
    return parse_wdbc_csv(wdbc_path)


@pytest.fixture(scope="session")
def trained_result(wdbc):
    """One default-flag training run shared across artifact/cli/service tests."""
    return train_pipeline(wdbc, PipelineConfig())


@pytest.fixture(scope="session")
def trained_artifact(trained_result):
    return trained_result.artifact


@pytest.fixture(scope="session")
def trained_artifact_path(tmp_path_factory, trained_artifact) -> Path:
    path = tmp_path_factory.mktemp("model") / "model.json"
    save_artifact(trained_artifact, path)
    return path
