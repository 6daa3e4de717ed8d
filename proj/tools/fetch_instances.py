#!/usr/bin/env python3
# SPDX-License-Identifier: Apache-2.0
# Copyright 2026 The mdbp Authors
"""Writes the public benchmark graphs bundled with networkx as edge lists.

Karate vertices are numbered 1..34, Les Miserables vertices keep their
character names. Other instances (dolphins, protein networks) have to be
obtained separately and placed in the same directory.
"""

import argparse
import pathlib

import networkx as nx


def write_edgelist(graph, path, header, label=str):
    with open(path, "w", encoding="utf-8") as out:
        out.write(f"# {header}\n")
        out.write(f"# n={graph.number_of_nodes()} m={graph.number_of_edges()}\n")
        for u, v in graph.edges():
            out.write(f"{label(u)} {label(v)}\n")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default=pathlib.Path(__file__).resolve().parent.parent / "data",
                        type=pathlib.Path, help="target directory (default: ./data)")
    args = parser.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    karate = nx.karate_club_graph()
    write_edgelist(karate, args.out / "karate.txt", "Zachary karate club", lambda v: v + 1)

    lesmis = nx.les_miserables_graph()
    for v in lesmis.nodes():
        if any(c.isspace() for c in v) or "#" in v:
            raise SystemExit(f"label {v!r} cannot be written to an edge list")
    write_edgelist(lesmis, args.out / "lesmis.txt", "Les Miserables co-appearances")

    for name in ("karate.txt", "lesmis.txt"):
        print(args.out / name)


if __name__ == "__main__":
    main()
