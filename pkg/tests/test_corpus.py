from hypothesis import given, settings

from psfprover import prop
from psfprover.corpus import SemanticIndex, exhaustive_corpus, read_corpus, run_corpus
from psfprover.kripke import Counterexample, forces_prop, semantic_decide

from conftest import prop_sequents

INDEX = SemanticIndex(2, ("p", "q"))


def test_exhaustive_corpus_size():
    corpus = list(exhaustive_corpus(max_size=3))
    side = 1 + 3 + 27
    assert len(corpus) == side * side
    assert prop.PropSequent((), ()) in corpus


@settings(max_examples=200)
@given(prop_sequents(atoms=("p", "q")))
def test_index_agrees_with_semantic_decide(s):
    cex = INDEX.counterexample(s)
    assert (cex is None) == (not isinstance(semantic_decide(s, 2), Counterexample))
    if cex is not None:
        m, w = cex
        assert all(forces_prop(m, w, f) for f in s.antecedent)
        assert not any(forces_prop(m, w, f) for f in s.succedent)


def test_read_corpus(tmp_path):
    f = tmp_path / "c.txt"
    f.write_text("# header\n=> p -> p  # identity\n\n  p => p\n", encoding="utf-8")
    assert read_corpus(f) == [(2, prop.parse_sequent("=> p -> p")), (4, prop.parse_sequent("p => p"))]


def test_run_corpus_small():
    rep = run_corpus(exhaustive_corpus(max_size=1), semantics=INDEX, keep_provable=True)
    assert rep.total == 16
    assert rep.provable + rep.refuted == 16
    assert not (rep.disagreements or rep.soundness_violations or rep.bad_countermodels
                or rep.oracle_inconsistencies or rep.unresolved)
    assert len(rep.provable_instances) == rep.provable
