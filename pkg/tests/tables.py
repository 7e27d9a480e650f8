"""Hand-entered reference tables used as regression fixtures."""

from leibnizalg import AlgebraTable

EX3_LABELS = ("e1", "h1", "f1", "e2", "h2", "f2", "x1", "x2", "x3", "x4")


def example3_reference() -> AlgebraTable:
    """The 10-dimensional shared-module algebra, entered product by product."""
    ix = {lab: i for i, lab in enumerate(EX3_LABELS)}
    prods: dict[tuple[int, int], dict[int, int]] = {}

    def put(a: str, b: str, **targets: int) -> None:
        prods[(ix[a], ix[b])] = {ix[t]: c for t, c in targets.items()}

    for i in ("1", "2"):
        e, h, f = f"e{i}", f"h{i}", f"f{i}"
        put(e, h, **{e: 2})
        put(f, h, **{f: -2})
        put(e, f, **{h: 1})
        put(h, e, **{e: -2})
        put(h, f, **{f: 2})
        put(f, e, **{h: -1})
    put("x1", "f1", x2=1)
    put("x1", "h1", x1=1)
    put("x2", "e1", x1=-1)
    put("x2", "h1", x2=-1)
    put("x3", "f1", x4=1)
    put("x3", "h1", x3=1)
    put("x4", "e1", x3=-1)
    put("x4", "h1", x4=-1)
    put("x1", "f2", x3=1)
    put("x1", "h2", x1=1)
    put("x3", "e2", x1=-1)
    put("x3", "h2", x3=-1)
    put("x2", "f2", x4=1)
    put("x2", "h2", x2=1)
    put("x4", "e2", x2=-1)
    put("x4", "h2", x4=-1)
    return AlgebraTable.from_products(10, prods, EX3_LABELS)
