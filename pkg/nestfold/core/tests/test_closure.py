import pytest

from nestfold.core.services.closure import nestedness_report
from nestfold.core.services.closure import reachability_closure
from nestfold.corpus.services.families import corpus_program
from nestfold.utils.enums import ArgumentKind
from nestfold.utils.exceptions import UnknownRootError

PLAIN = ArgumentKind.PLAIN
NESTED = ArgumentKind.NESTED


@pytest.mark.parametrize(
    ("program", "root", "expected"),
    [
        ("d", "D", ("D", "I")),
        ("d", "I", ("I",)),
        ("bush", "Bush", ("Bush",)),
        ("term", "Term", ("Term", "Incr")),
        ("terme", "TermE", ("TermE", "Incr")),
        ("list", "List", ("List",)),
    ],
)
def test_reachability_closure(program, root, expected):
    assert reachability_closure(corpus_program(program), root) == expected


def test_closure_is_idempotent_and_closed():
    program = corpus_program("d")
    closure = reachability_closure(program, "D")
    for name in closure:
        assert set(reachability_closure(program, name)) <= set(closure)


def test_unknown_root():
    with pytest.raises(UnknownRootError):
        reachability_closure(corpus_program("bush"), "Tree")


@pytest.mark.parametrize(
    ("program", "root", "constructor", "flags"),
    [
        ("bush", "Bush", "ConsB", (PLAIN, NESTED)),
        ("list", "List", "Cons", (PLAIN, PLAIN)),
        ("terme", "TermE", "LamE", (NESTED,)),
        ("term", "Term", "Lam", (NESTED,)),
        ("term", "Term", "App", (PLAIN, PLAIN)),
        ("d", "D", "DCons", (PLAIN, PLAIN, NESTED, NESTED)),
    ],
)
def test_nestedness_report(program, root, constructor, flags):
    report = {r.constructor: r for r in nestedness_report(corpus_program(program), root)}
    assert report[constructor].flags == flags
    assert report[constructor].is_nested == (NESTED in flags)
