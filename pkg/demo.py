#!/usr/bin/env python3
"""
Demo script for the NulLA certificate engine
Walks through encoding, degree search, enumerative certificates and the
matching transform without touching any files
"""

from encoders import encode_independent_set, encode_perfect_matching_v1, encode_perfect_matching_v2
from enumcert import (analyze, bipartite_degree_zero, complete_certificate, invert_cardinality_form,
                      matching_transform, split_matching_certificate, structure_monomial_basis)
from graphs import complete_graph, path_graph, star_graph
from nulla import nulla_solve, verify_certificate


def demo_triangle_certificate():
    """Three pairwise adjacent vertices hold no independent pair"""
    print("🧮 NulLA Demo - Independent sets of the triangle")
    print("=" * 50)

    system = encode_independent_set(complete_graph(3), 2)
    for i, f in enumerate(system.polys):
        print(f"  f{i + 1} [{system.label(i)}] = {f}")

    result = nulla_solve(system, 2)
    print()
    print(result.report.to_table())
    print(f"\nMinimum certificate degree: {result.degree}")
    for i, beta in enumerate(result.certificate.betas):
        print(f"  beta{i + 1} = {beta}")
    print(f"Verified: {'✅' if verify_certificate(system, result.certificate) else '❌'}")
    print()


def demo_enumerative_certificate():
    """The cardinality coefficient read straight off the independent sets"""
    print("🧮 NulLA Demo - Certificates from the structure family")
    print("=" * 50)

    report = analyze(encode_independent_set(path_graph(4), 3))
    print(report.to_text())


def demo_matching_transform():
    """Boolean/line-graph certificate of K_{1,3} rewritten for vertex equations"""
    print("🧮 NulLA Demo - Perfect matchings of the star K_{1,3}")
    print("=" * 50)

    graph = star_graph(3)
    v2 = encode_perfect_matching_v2(graph)
    beta1 = invert_cardinality_form(v2, structure_monomial_basis(v2))
    c2 = complete_certificate(v2, beta1)
    v1 = encode_perfect_matching_v1(graph)
    deltas, thetas = split_matching_certificate(matching_transform(c2, graph), v1)
    for v, delta in deltas.items():
        print(f"  Delta_{v} = {delta}")
    print(f"  all Theta zero: {all(t.is_zero() for t in thetas.values())}")

    fast = bipartite_degree_zero(graph)
    print(f"  degree-zero certificate from the bipartition: {[str(b) for b in fast.betas[:graph.n]]}")
    print()


def main():
    """Run all demos"""
    print("🎓 Welcome to the NulLA certificate engine demo!")
    print("Everything below is exact rational arithmetic; no files are written.\n")

    demo_triangle_certificate()
    demo_enumerative_certificate()
    demo_matching_transform()

    print("🎯 Ready for your own graphs?")
    print("1. Install dependencies: pip install -r requirements.txt")
    print("2. Encode a problem: nulla encode --graph samples/k5.el --problem matching-v1 -o k5.json")
    print("3. Search for a certificate: nulla solve --system k5.json -o k5_cert.json")
    print("4. Check it exactly: nulla verify --system k5.json --certificate k5_cert.json")


if __name__ == "__main__":
    main()
