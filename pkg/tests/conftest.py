from __future__ import annotations

import os

import pytest

from khs import numtheory


@pytest.fixture(autouse=True, scope="session")
def isolated_bernoulli_cache(tmp_path_factory):
    """Keep the memo cache inside the test tree for the whole session."""
    path = tmp_path_factory.mktemp("bernoulli") / "bernoulli.tsv"
    os.environ["KHS_CACHE"] = str(path)
    numtheory.set_bernoulli_cache_path(path)
    yield path
