import math
import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from systolab import PolygonComplex, build_flat_torus, build_octahedron, build_pillow, load_mesh

from meshgen import build_genus2_mesh

DATA_DIR = os.path.join(os.path.dirname(__file__), "data")


@pytest.fixture(scope="session")
def square_torus3():
    return build_flat_torus((1.0, 0.0), (0.0, 1.0), 3)


@pytest.fixture(scope="session")
def square_torus4():
    return build_flat_torus((1.0, 0.0), (0.0, 1.0), 4)


@pytest.fixture(scope="session")
def square_torus5():
    return build_flat_torus((1.0, 0.0), (0.0, 1.0), 5)


@pytest.fixture(scope="session")
def hex_torus6():
    return build_flat_torus((1.0, 0.0), (0.5, math.sqrt(3.0) / 2.0), 6)


@pytest.fixture(scope="session")
def wide_torus4():
    return build_flat_torus((2.0, 0.0), (0.0, 1.0), 4)


@pytest.fixture(scope="session")
def tall_torus4():
    return build_flat_torus((1.0, 0.0), (0.0, 5.0), 4)


@pytest.fixture(scope="session")
def octahedron():
    return build_octahedron()


@pytest.fixture(scope="session")
def pillow():
    return build_pillow()


@pytest.fixture(scope="session")
def genus2_mesh():
    return build_genus2_mesh()


@pytest.fixture(scope="session")
def genus2_mesh_file():
    return load_mesh(os.path.join(DATA_DIR, "genus2_gluing.json"))


@pytest.fixture(scope="session")
def genus2_polygon():
    return PolygonComplex(genus=2)
