"""Fixtures compartilhadas: projeto_enriques no sys.path e uma tabela ω pequena."""

import sys
from pathlib import Path

import pytest

RAIZ = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(RAIZ / "projeto_enriques"))

from invariantes.omega import omega_table  # noqa: E402


@pytest.fixture(scope="session")
def tabela_omega():
    """ω_g(n) para g ≤ 6 e n ≤ 32."""
    return omega_table(6, 32)
