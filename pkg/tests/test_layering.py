"""The exact engine must not read the printed tables it is audited against."""

import ast
from pathlib import Path

import pytest

import burniat

PKG = Path(burniat.__file__).parent
ENGINE = ["affine_group", "characters", "forms", "theta_model", "hodge", "hypotheses", "scenarios"]


def _imports(path: Path) -> set[str]:
    names = set()
    for node in ast.walk(ast.parse(path.read_text())):
        if isinstance(node, ast.Import):
            names.update(a.name for a in node.names)
        elif isinstance(node, ast.ImportFrom):
            mod = node.module or ""
            names.add(mod)
            names.update(f"{mod}.{a.name}" if mod else a.name for a in node.names)
    return names


@pytest.mark.parametrize("module", ENGINE)
def test_engine_does_not_import_baselines(module):
    assert not any("baselines" in n for n in _imports(PKG / f"{module}.py"))


@pytest.mark.parametrize("module", ENGINE)
def test_engine_is_float_free(module):
    names = _imports(PKG / f"{module}.py")
    assert not any(n.split(".")[0] in ("numpy", "scipy", "numba") for n in names)
