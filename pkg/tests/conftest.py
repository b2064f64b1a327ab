import pytest

from fwminer.extraction import RegexTiers
from fwminer.templates import load_template_bank
from fwminer.text import StopwordLists, data_path


@pytest.fixture(scope="session")
def stopwords():
    return StopwordLists.bundled()


@pytest.fixture(scope="session")
def tiers():
    return RegexTiers.bundled()


@pytest.fixture(scope="session")
def template_bank():
    return load_template_bank()


@pytest.fixture(scope="session")
def minicorpus_path():
    return data_path("minicorpus.jsonl")


@pytest.fixture(scope="session")
def gold_path():
    return data_path("minicorpus_gold.jsonl")
