#!/usr/bin/env python3
"""End-to-end demo over the bundled fixtures.

Converts the BioPAX fixtures, imports the taxonomy/GO/ChEBI/PRO hierarchy
modules, merges everything, prints the declaration counts and a sample
query, and re-runs the whole thing to prove byte-level determinism.

Usage: python3 scripts/run_pipeline.py [outdir]   (default: build/demo)
"""

import filecmp
import shutil
import subprocess
import sys
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent
FIXTURES = REPO / "tests" / "fixtures"

SAMPLE_QUERY = (
    "select distinct ?s, ?l "
    "from <http://purl.obolibrary.org/obo/merged/HINO> "
    "where { ?s rdfs:label ?l . "
    "?s rdfs:subClassOf <http://purl.obolibrary.org/obo/INO_0000021> }"
)


def cli(*args: str) -> None:
    command = [sys.executable, "-m", "pathonto.cli", *args]
    print("+", " ".join(str(a) for a in args), flush=True)
    subprocess.run(command, check=True, cwd=REPO)


def build(outdir: Path) -> None:
    outdir.mkdir(parents=True, exist_ok=True)
    cli(
        "convert",
        str(FIXTURES / "mini_tlr4.owl"),
        str(FIXTURES / "mixed_species.owl"),
        "--registry", str(outdir / "registry.tsv"),
        "--out", str(outdir / "converted.ttl"),
        "--report", str(outdir / "report.json"),
        "--import-requests", str(outdir / "requests.txt"),
        "--skipped-report", str(outdir / "skipped.tsv"),
    )
    modules = []
    for name in ("taxonomy", "go_cc", "chebi", "pro"):
        module_path = outdir / f"module_{name}.ttl"
        cli(
            "import",
            "--spec", str(FIXTURES / f"{name}.importspec"),
            "--seeds", str(outdir / "requests.txt"),
            "--out", str(module_path),
        )
        modules.append(module_path)
    cli(
        "merge",
        str(outdir / "converted.ttl"),
        *[str(m) for m in modules],
        "--out", str(outdir / "merged.ttl"),
    )


def main() -> None:
    outdir = Path(sys.argv[1]) if len(sys.argv) > 1 else REPO / "build" / "demo"
    build(outdir)

    print("\n--- declaration counts ---")
    cli("stats", str(outdir / "merged.ttl"))

    print("\n--- pathway subclass listing ---")
    cli("query", str(outdir / "merged.ttl"), "--query", SAMPLE_QUERY)

    rerun = outdir.parent / (outdir.name + "_rerun")
    if rerun.exists():
        shutil.rmtree(rerun)
    build(rerun)
    mismatches = [
        name
        for name in sorted(p.name for p in outdir.iterdir())
        if not filecmp.cmp(outdir / name, rerun / name, shallow=False)
    ]
    if mismatches:
        sys.exit(f"re-run differs: {mismatches}")
    print("\nre-run byte-identical; serve the result with:")
    print(f"  pathonto serve {outdir / 'merged.ttl'}")


if __name__ == "__main__":
    main()
