import pytest

import conjtop


def test_library_lists_the_quadric():
    names = conjtop.library().names()
    assert "complex quadric" in names
    assert "map torus_reflection" in names


def test_betti_numbers_of_the_tetrahedron_boundary():
    faces = [[1, 2, 3], [0, 2, 3], [0, 1, 3], [0, 1, 2]]
    assert conjtop.betti_numbers(4, faces) == [1, 0, 1]
    assert conjtop.euler_characteristic(4, faces) == 2


def test_classify_and_divide():
    assert conjtop.classify("quadric", h="(1,1)") == "I_rel"
    assert conjtop.classify("torus_diagonal") == "II"
    report = conjtop.run("divide", "torus_reflection")
    assert report["status"] == 0
    assert report["values"]["dividing"] == "true"
    assert report["values"]["half.0.size"] == "16"


def test_statuses():
    assert conjtop.run("congruence", chi=8, type="I_abs", h1_trivial=True)["status"] == 0
    assert conjtop.run("congruence", chi=2, type="I_abs", h1_trivial=True)["status"] == 1
    assert conjtop.run("homology", "missing")["status"] == 2


def test_forms():
    assert conjtop.characteristic_class([[1, 0], [0, 1]]) == [1, 1]
    assert conjtop.is_even([[0, 1], [1, 0]])
    assert conjtop.arf([[0, 1], [1, 0]], [1, 1]) == 1
    assert conjtop.brown([[1]], [1]) == 1
    assert conjtop.brown([[1]], [3]) == 7
    assert conjtop.gauss_sum([[1]], [3]) == (1, -1)
    assert conjtop.spin_value(2, [1, 1]) == 0
    assert conjtop.pin_value(1, [0], 1) == 3


def test_exceptions():
    with pytest.raises(conjtop.InputError):
        conjtop.characteristic_class([[1, 1], [1, 1]])
    with pytest.raises(ValueError):
        conjtop.parse_model("[complex a\n")
    with pytest.raises(conjtop.ModelIntegrityError):
        conjtop.kharlamov_check(4, "I_abs", True)
    assert conjtop.kharlamov_check(16, "I_abs", True)["s_quot"] == -32


def test_model_text_round_trip():
    lib = conjtop.library()
    again = conjtop.parse_model(lib.to_text())
    assert again == lib
    assert conjtop.parse_model("").empty
    small = conjtop.parse_model("[complex c]\nvertices 3\n0 1\n1 2\n0 2\n")
    assert conjtop.run("homology", "c", model=small)["values"]["betti"] == "1,1"
