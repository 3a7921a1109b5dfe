"""Convert a MyThes thesaurus (.dat file, e.g. from mythes-tr) into the
``word<TAB>syn1,syn2,...`` lexicon format."""

import argparse

from tagrec.semantics import lexicon_lines, read_mythes
from tagrec.tsv import write_lines

if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("dat", help="thesaurus data file (th_*.dat)")
    parser.add_argument("out", help="output TSV path")
    args = parser.parse_args()
    lex = read_mythes(args.dat)
    write_lines(args.out, lexicon_lines(lex))
    print(f"{len(lex)} headwords, {len(lex.pairs())} pairs -> {args.out}")
