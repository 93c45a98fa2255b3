"""Rerun the provable part of the exhaustive corpus with geometric rules switched off.

For each configuration, records how many instances keep their proof and lists
every divergent instance with the (unverified) model read off the open branch.

Usage: python scripts/run_geometric_ablation.py [--max-size 5] [--depth 200] [--out results/geometric_ablation.json]
"""
import argparse
import json
import time
from pathlib import Path

from psfprover.corpus import exhaustive_corpus
from psfprover.oracle import Provable, mg3ip_prove
from psfprover.prover import DepthExceeded, Proof, SearchConfig, prove
from psfprover.psf import translate_sequent

CONFIGS = {
    "no-mono-no-tran": dict(enable_mono=False, enable_tran=False),
    "no-mono": dict(enable_mono=False),
    "no-tran": dict(enable_tran=False),
}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-size", type=int, default=5)
    ap.add_argument("--depth", type=int, default=200, help="safety bound on logical steps")
    ap.add_argument("--configs", nargs="+", choices=list(CONFIGS), default=list(CONFIGS))
    ap.add_argument("--out", type=Path, default=Path("results/geometric_ablation.json"))
    args = ap.parse_args()

    provable = [s for s in exhaustive_corpus(("p", "q"), args.max_size)
                if isinstance(mg3ip_prove(s), Provable)]
    print(f"{len(provable)} provable instances")
    out = {"max_size": args.max_size, "depth_bound": args.depth,
           "provable_instances": len(provable), "runs": {}}
    for name in args.configs:
        cfg = SearchConfig(depth_bound=args.depth, **CONFIGS[name])
        start = time.perf_counter()
        kept, cut, divergent = 0, 0, []
        for s in provable:
            t = translate_sequent(s)
            res = prove(t, cfg)
            if isinstance(res, Proof):
                kept += 1
            elif isinstance(res, DepthExceeded):
                cut += 1
                divergent.append({"sequent": str(s), "result": "depth-exceeded"})
            else:
                divergent.append({"sequent": str(s), "result": "refuted",
                                  "model": res.model.to_json(falsified=str(t),
                                                             assignment=res.assignment)})
        secs = time.perf_counter() - start
        rate = kept / len(provable) if provable else 1.0
        print(f"{name}: {kept}/{len(provable)} kept ({100 * rate:.2f}%), "
              f"{len(divergent) - cut} refuted, {cut} depth-exceeded [{secs:.1f}s]")
        out["runs"][name] = {"kept": kept, "agreement_rate": rate,
                             "depth_exceeded": cut, "divergent": divergent}
    args.out.parent.mkdir(parents=True, exist_ok=True)
    args.out.write_text(json.dumps(out, indent=2))
    print(f"wrote {args.out}")


if __name__ == "__main__":
    main()
