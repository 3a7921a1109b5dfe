"""Regenerate the bundled synthetic fixture under src/tagrec/data/fixture/."""

import argparse
from pathlib import Path

from tagrec import fixture

DEFAULT_OUT = Path(__file__).resolve().parents[1] / "src" / "tagrec" / "data" / "fixture"

if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", type=Path, default=DEFAULT_OUT)
    parser.add_argument("--seed", type=int, default=fixture.SEED)
    args = parser.parse_args()
    for path in fixture.write(args.out_dir, args.seed):
        print(path)
