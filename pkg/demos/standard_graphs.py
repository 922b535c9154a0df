"""Build the standard graphs, check them, and print the A-chain span table for g = 7."""

from gcg import families, planes
from gcg.graph import edge_connectivity, validate


def main():
    for g in range(7, 13):
        graph = families.standard_graph(g)
        report = validate(graph)
        print(f"G{g}: {graph.vertex_count} vertices, {len(graph.edges)} edges, "
              f"connectivity {edge_connectivity(graph)}, valid={bool(report)}")

    dec = families.ab_decomposition(7)
    chain_a = planes.chain_config(dec, "A")
    curve = planes.double_curve(chain_a, planes.chain_config(dec, "B"))
    print("\nspans of the A planes at g = 7 (p = point, l = line):")
    for row in planes.span_table(chain_a, curve).rows:
        print(f"  {row.plane:>4}: {row.first[0]}{row.first[1]} + {row.second[0]}{row.second[1]}")


if __name__ == "__main__":
    main()
