"""Partition sizes and admissible-subset counts for every involutory automorphism."""

import argparse

from gcgraph.aut import automorphisms, involutory_automorphisms
from gcgraph.gencayley import count_subsets, partition
from gcgraph.group import named_group

ap = argparse.ArgumentParser()
ap.add_argument("groups", nargs="*", default=["S3", "S4", "D8", "D12", "A4"])
ap.add_argument("--max-size", type=int, default=4)
args = ap.parse_args()

for name in args.groups:
    G = named_group(name)
    seen = set()
    for a in involutory_automorphisms(automorphisms(G)):
        part = partition(G, a)
        row = (len(part.omega), len(part.big_omega), len(part.mho), count_subsets(G, a, args.max_size))
        if row in seen:
            continue
        seen.add(row)
        print(f"{name:4} {a.describe(G):18} |omega|={row[0]:3} |Omega|={row[1]:3} |mho|={row[2]:3} subsets<={args.max_size}: {row[3]}")
