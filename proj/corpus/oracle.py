#!/usr/bin/env python3
"""Writes the expected-value sidecars for the corpus.

Expressions are parsed and evaluated here from scratch and the values come
from networkx or plain enumeration, so the sidecars do not depend on the C++
code. Run from anywhere: python3 corpus/oracle.py
"""

import itertools
import json
import re
import sys
from fractions import Fraction
from pathlib import Path

import networkx as nx

HERE = Path(__file__).resolve().parent
TARGETS = ["h1", "k2", "h3"]
Z_MAX_VERTICES = 10

TOKEN = re.compile(r"\s*(?:(#[^\n]*)|(->)|([(){},])|(w=)|([-0-9/]+)|([a-z]+))")


def tokenize(text):
    pos, out = 0, []
    while pos < len(text):
        m = TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise ValueError(f"bad input at {pos}")
            break
        pos = m.end()
        if m.group(1) is None and m.group(0).strip():
            out.append(m.group(0).strip())
    return out


class Parser:
    def __init__(self, text):
        self.toks = tokenize(text)
        self.i = 0

    def take(self, want=None):
        t = self.toks[self.i]
        self.i += 1
        if want is not None and t != want:
            raise ValueError(f"expected {want}, got {t}")
        return t

    def colorset(self):
        self.take("{")
        out = set()
        while self.toks[self.i] != "}":
            if self.toks[self.i] == ",":
                self.take()
                continue
            out.add(int(self.take()))
        self.take("}")
        return frozenset(out)

    def expr(self):
        self.take("(")
        kind = self.take()
        if kind == "v":
            node = ("v", self.colorset(), None)
            if self.toks[self.i] == "w=":
                self.take()
                node = ("v", node[1], Fraction(self.take()))
        elif kind == "u":
            node = ("u", self.expr(), self.expr())
        elif kind == "j":
            i, j = int(self.take()), int(self.take())
            node = ("j", i, j, self.expr(), self.expr())
        elif kind == "r":
            self.take("{")
            rules = {}
            while self.toks[self.i] != "}":
                if self.toks[self.i] == ",":
                    self.take()
                    continue
                src = self.colorset()
                self.take("->")
                rules[src] = self.colorset()
            self.take("}")
            node = ("r", rules, self.expr())
        else:
            raise ValueError(f"unknown node {kind}")
        self.take(")")
        return node


def build(node):
    """Returns (graph with 'colors' and 'w' vertex attributes)."""
    g = nx.Graph()
    counter = itertools.count()

    def go(n):
        if n[0] == "v":
            v = next(counter)
            g.add_node(v, colors=n[1], w=n[2])
            return [v]
        if n[0] == "u":
            return go(n[1]) + go(n[2])
        if n[0] == "j":
            _, i, j, a, b = n
            vs = go(a) + go(b)
            ci = [v for v in vs if i in g.nodes[v]["colors"]]
            cj = [v for v in vs if j in g.nodes[v]["colors"]]
            for u in ci:
                for v in cj:
                    if u != v:
                        g.add_edge(u, v)
            return vs
        _, rules, sub = n
        vs = go(sub)
        for v in vs:
            c = g.nodes[v]["colors"]
            g.nodes[v]["colors"] = rules.get(c, c)
        return vs

    go(node)
    return g


def read_graph(text):
    g = nx.Graph()
    lines = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    n = int(lines[0][1])
    g.add_nodes_from(range(n), colors=frozenset(), w=None)
    for ln in lines[1:]:
        if ln[0] == "e":
            g.add_edge(int(ln[1]), int(ln[2]))
    return g


def read_target(text):
    lines = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    n = int(lines[0][1])
    alpha = [Fraction(0)] * n
    beta = {}
    for ln in lines[1:]:
        if ln[0] == "a":
            alpha[int(ln[1])] = Fraction(ln[2])
        else:
            a, b = sorted((int(ln[1]), int(ln[2])))
            beta[(a, b)] = Fraction(ln[3])
    return n, alpha, beta


def weight(g, v):
    w = g.nodes[v]["w"]
    return Fraction(1) if w is None else w


def independent_sets(g):
    # Cliques of the complement are the nonempty independent sets.
    comp = nx.complement(g)
    yield ()
    yield from nx.enumerate_all_cliques(comp)


def alpha(g):
    return max(sum((weight(g, v) for v in s), Fraction(0)) for s in independent_sets(g))


def omega(g):
    if g.number_of_nodes() == 0:
        return Fraction(0)
    return Fraction(nx.max_weight_clique(g, weight=None)[1])


def count(g):
    total = 0
    for s in independent_sets(g):
        prod = 1
        for v in s:
            prod *= int(weight(g, v))
        total += prod
    return total


def z_partition(g, target):
    n, a, b = target
    vs = list(g.nodes)
    best = None
    for h in itertools.product(range(n), repeat=len(vs)):
        m = dict(zip(vs, h))
        total = Fraction(0)
        ok = True
        for u, v in g.edges:
            key = tuple(sorted((m[u], m[v])))
            if key not in b:
                ok = False
                break
            total += b[key]
        if not ok:
            continue
        total += sum(a[m[v]] for v in vs)
        if best is None or total > best:
            best = total
    return "-inf" if best is None else str(best)


def natural_weights(g):
    return all(
        g.nodes[v]["w"] is None or (g.nodes[v]["w"].denominator == 1 and g.nodes[v]["w"] >= 0) for v in g.nodes
    )


def single_colored(g):
    return all(len(g.nodes[v]["colors"]) <= 1 for v in g.nodes)


def expected(g, targets):
    out = {
        "n": g.number_of_nodes(),
        "edges": g.number_of_edges(),
        "single_colored": single_colored(g),
        "alpha": str(alpha(g)),
        "omega": str(omega(g)),
    }
    if natural_weights(g):
        out["count"] = str(count(g))
    if g.number_of_nodes() <= Z_MAX_VERTICES:
        out["zH"] = {name: z_partition(g, t) for name, t in targets.items()}
    return out


def main():
    targets = {name: read_target((HERE / "targets" / f"{name}.txt").read_text()) for name in TARGETS}
    written = 0
    for path in sorted((HERE / "expr").glob("*.cwe")):
        g = build(Parser(path.read_text()).expr())
        path.with_suffix(".expected.json").write_text(json.dumps(expected(g, targets), indent=1) + "\n")
        written += 1
    for path in sorted((HERE / "graphs").glob("*.g")):
        g = read_graph(path.read_text())
        path.with_suffix(".expected.json").write_text(json.dumps(expected(g, targets), indent=1) + "\n")
        written += 1
    print(f"wrote {written} sidecars", file=sys.stderr)


if __name__ == "__main__":
    main()
