"""Smoke test for the Python bindings. Run after `pip install -e crates/python --no-build-isolation`."""

import coxgrowth


def main():
    keys = coxgrowth.catalog_keys()
    assert "lanner-5334" in keys and "ra-hexagon" in keys, keys

    hexagon = coxgrowth.CoxeterSystem.catalog("ra-hexagon")
    assert hexagon.rank == 6
    assert hexagon.taylor(10) == [1, 6, 24, 90, 336, 1254, 4680, 17466, 65184, 243270, 907896]

    lanner = coxgrowth.CoxeterSystem.catalog("lanner-5334")
    growth = lanner.growth()
    assert growth["complete"]["blocks"] == [2, 8, 12, 20, 30], growth["complete"]
    assert lanner.conjecture()["pass"]

    cell = coxgrowth.right_angled_4d([600, 1200, 720, 120])
    assert cell["reduced"]["den"] == [1, -116, 366, -116, 1], cell["reduced"]

    linear = coxgrowth.CoxeterSystem.linear([5, 3, 3])
    assert linear.finite_subset_counts()[-1] == 1
    counts = linear.oracle(6, max_length=60)
    assert counts["pass"], counts

    try:
        coxgrowth.CoxeterSystem.parse("rank 2\nedge 1 3 3\n")
    except ValueError:
        pass
    else:
        raise AssertionError("bad index accepted")

    assert lanner.recursion()["agrees_with_direct"]
    assert issubclass(coxgrowth.IntegrityError, Exception)

    print("python smoke test passed")


if __name__ == "__main__":
    main()
