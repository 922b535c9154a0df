"""Gaussian-map coranks of the standard graphs, certified by two rank backends."""

import sys

from gcg import families, gauss


def main(top=20):
    print(" g  target x domain   rank  corank")
    for g in range(7, top + 1):
        cert = gauss.graph_corank(families.standard_graph(g), seed=g)
        print(f"{g:>2}  {cert.target_dim:>6} x {cert.domain_dim:<6} {cert.rank:>5}  {cert.corank:>6}")
    for g in (7, 8):
        print(f"tilde G{g}: corank {gauss.graph_corank(families.tilde_graph(g)).corank}")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 20)
