"""Exhaustive equivalence run: PSF prover vs m-G3ip vs bounded Kripke semantics.

Usage: python scripts/run_equivalence.py [--max-size 5] [--atoms p q] [--worlds 3] [--out results/equivalence.json]
"""
import argparse
import json
from pathlib import Path

from psfprover.corpus import SemanticIndex, exhaustive_corpus, run_corpus
from psfprover.prover import SearchConfig


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-size", type=int, default=5)
    ap.add_argument("--atoms", nargs="+", default=["p", "q"])
    ap.add_argument("--worlds", type=int, default=3, help="world bound for the semantic check")
    ap.add_argument("--out", type=Path, default=Path("results/equivalence.json"))
    args = ap.parse_args()

    atoms = tuple(args.atoms)
    rep = run_corpus(exhaustive_corpus(atoms, args.max_size), SearchConfig(),
                     semantics=SemanticIndex(args.worlds, atoms))
    print(rep.summary())
    args.out.parent.mkdir(parents=True, exist_ok=True)
    args.out.write_text(json.dumps({
        "atoms": list(atoms), "max_size": args.max_size, "world_bound": args.worlds,
        "total": rep.total, "provable": rep.provable, "refuted": rep.refuted,
        "depth_exceeded": rep.depth_exceeded, "disagreements": rep.disagreements,
        "soundness_violations": rep.soundness_violations,
        "bad_countermodels": rep.bad_countermodels,
        "oracle_inconsistencies": rep.oracle_inconsistencies,
        "unresolved": rep.unresolved, "seconds": round(rep.seconds, 1),
    }, indent=2))
    print(f"wrote {args.out}")


if __name__ == "__main__":
    main()
