import pytest

from gbundles.complex import StandardSpace, build_standard, make_complex


def standard_spaces(max_genus=4, max_crosscaps=4, max_wedge=4):
    spaces = [StandardSpace("sphere")]
    spaces += [StandardSpace("orientable", g) for g in range(1, max_genus + 1)]
    spaces += [StandardSpace("nonorientable", k) for k in range(1, max_crosscaps + 1)]
    spaces += [StandardSpace("wedge", n) for n in range(0, max_wedge + 1)]
    return spaces


@pytest.fixture
def torus():
    return build_standard("genus=1")


@pytest.fixture
def rp2():
    return build_standard("crosscaps=1")


@pytest.fixture
def sphere():
    return build_standard("sphere")


@pytest.fixture
def klein():
    """Klein bottle with the word a b a b^-1 (not the builder's a a b b model)."""
    return make_complex(
        "K", ["x"], [("a", "x", "x"), ("b", "x", "x")], [("f", [("a", 1), ("b", 1), ("a", 1), ("b", -1)])], "x"
    )
