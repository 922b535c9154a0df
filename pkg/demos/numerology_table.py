"""Dimension counts per genus and the Table Two consistency rows."""

from gcg import numerology


def main():
    print(" g  dim_H  dim_C  dim_F  fiber  cone")
    for g in range(6, 21):
        r = numerology.dimensions(g)
        print(f"{g:>2}  {r.dim_H:>5}  {r.dim_C:>5}  {r.dim_F:>5}  "
              f"{'-' if r.fiber_dim is None else r.fiber_dim:>5}  {'-' if r.cone_codim is None else r.cone_codim:>4}")
    print()
    for row in numerology.table_two():
        print(row.line())


if __name__ == "__main__":
    main()
