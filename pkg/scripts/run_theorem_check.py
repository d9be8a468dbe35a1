"""Run the theorem suite under both quantifier variants and save the reports.

Usage: python scripts/run_theorem_check.py [--out results] [--jobs 2]
"""

import argparse
from dataclasses import dataclass
from pathlib import Path

from gradedlie import corpus
from gradedlie.classify import QuantifierVariant
from gradedlie.report import emit_report
from gradedlie.theorems import theorem_suite


@dataclass
class RunConfig:
    out: Path = Path("results")
    jobs: int = 1
    variants: tuple[str, ...] = ("literal", "proper")


def run(cfg: RunConfig) -> None:
    cfg.out.mkdir(parents=True, exist_ok=True)
    algebras = corpus.default_corpus()
    for name in cfg.variants:
        report = theorem_suite(algebras, QuantifierVariant.from_name(name), jobs=cfg.jobs)
        (cfg.out / f"theorems_{name}.json").write_text(emit_report(report, "machine", timings=False))
        text = emit_report(report, "text")
        (cfg.out / f"theorems_{name}.txt").write_text(text)
        print(f"== {name}")
        print(text)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=RunConfig.out)
    ap.add_argument("--jobs", type=int, default=RunConfig.jobs)
    args = ap.parse_args()
    run(RunConfig(out=args.out, jobs=args.jobs))


if __name__ == "__main__":
    main()
