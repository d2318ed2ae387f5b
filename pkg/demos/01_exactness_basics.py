"""Exact phase retrievability from first principles.

Walks through the complement property, spark, and exactness on tiny frames
where every claim can be eyeballed.
"""

from prframes import (
    Frame,
    has_complement_property,
    is_exact_pr_frame,
    is_full_spark,
    is_phase_retrievable,
    spark,
)


def main():
    print("== A basis never retrieves phase ==")
    basis = Frame.from_vectors([(1, 0), (0, 1)], dim=2)
    res = has_complement_property(basis)
    print(f"standard basis of R^2: complement property holds = {res.holds}")
    print(f"  failing split: {sorted(res.failing)} vs its complement,")
    print("  neither side spans the plane.\n")

    print("== The shortest retrievable frame in R^2 ==")
    f = Frame.from_vectors([(1, 0), (0, 1), (1, 1)], dim=2)
    print(f"{{e1, e2, e1+e2}}: phase retrievable = {is_phase_retrievable(f)}")
    print(f"  spark = {spark(f)} (full spark = {is_full_spark(f)})")
    ex = is_exact_pr_frame(f)
    print(f"  exact (loses the property on every removal) = {ex.exact}\n")

    print("== One vector too many breaks exactness ==")
    g = Frame.from_vectors([(1, 0), (0, 1), (1, 1), (1, -1)], dim=2)
    ex = is_exact_pr_frame(g)
    print(f"length-4 full-spark frame in R^2: exact = {ex.exact}")
    print(f"  removable indices (property survives the removal): {list(ex.removable)}")


if __name__ == "__main__":
    main()
