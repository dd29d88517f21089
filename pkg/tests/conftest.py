import pytest

import support
from lamb import build_graph, parse_grammar, parse_lex_spec, scan


@pytest.fixture(scope="session")
def numbers_spec():
    return parse_lex_spec(support.numbers_spec_text())


@pytest.fixture(scope="session")
def numbers_grammar(numbers_spec):
    return parse_grammar(support.NUMBERS_GRAMMAR, numbers_spec)


@pytest.fixture(scope="session")
def numbers_scan(numbers_spec):
    return scan(numbers_spec, support.NUMBERS_INPUT)


@pytest.fixture(scope="session")
def numbers_graph(numbers_scan):
    return build_graph(numbers_scan)
