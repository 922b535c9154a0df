"""Walk through the rational-cycle data at g = 9: survivors, correspondences, limit union."""

from gcg import degeneration as deg


def main(g=9):
    data = deg.standard_data(g)
    print(f"g = {g}: cycle of {data.cycle.k} components, survivors {data.survivors.indices}")
    for name, corr in (("A", data.corr_a), ("B", data.corr_b)):
        rep = deg.is_compatible(data.survivors, corr)
        print(f"  {name}: kind {corr.kind}, j <-> {corr.constant} - j, compatible={bool(rep)}, "
              f"end pairs {rep.end_pairs}")
    report = deg.verify_union(data)
    print(f"union of the two limits matches S_G{g}: {bool(report)}")
    if report:
        print(f"  {len(report.limit_a.config.facets)} + {len(report.limit_b.config.facets)} planes")

    try:
        deg.standard_data(8)
    except deg.DegenerationError as exc:
        print(f"g = 8 data rejected: {exc}")


if __name__ == "__main__":
    main()
