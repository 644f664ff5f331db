# tests/test_output_format.py
import json

import pytest

from ccurves.bialgebra import FormalSum, TensorSum
from ccurves.output_format import (
    FormalSumPayload,
    OutputFormatManager,
    SurfacePayload,
    TensorSumPayload,
    ValuePayload,
)
from ccurves.surface import boundary_cycles, invariants, preset

from .conftest import cw


@pytest.fixture
def manager():
    return OutputFormatManager()


@pytest.fixture
def bracket_payload():
    return FormalSumPayload(FormalSum.monomial(cw("a1.a3"), -2))


def test_available_formats(manager):
    names = {f["name"] for f in manager.get_available_formats()}
    assert names == {"text", "json", "markdown", "html"}
    assert manager.is_format_supported("json")
    assert not manager.is_format_supported("svg")


def test_unknown_format(manager, bracket_payload):
    assert manager.format_report(bracket_payload, "svg") is None


def test_formal_sum(manager, bracket_payload):
    assert manager.format_report(bracket_payload, "json") == '[{"word":"a1.a3","coeff":-2}]'
    assert manager.format_report(bracket_payload, "text") == "-2·c(a1.a3)"
    md = manager.format_report(bracket_payload, "markdown")
    assert "| `a1.a3` | -2 |" in md


def test_tensor_sum(manager):
    payload = TensorSumPayload(TensorSum.monomial((cw("a1"), cw("a2")), 3))
    assert json.loads(manager.format_report(payload, "json")) == [
        {"left": "a1", "right": "a2", "coeff": 3}
    ]
    assert manager.format_report(payload, "text") == "3·c(a1) ⊗ c(a2)"


def test_zero_sums(manager):
    assert manager.format_report(FormalSumPayload(FormalSum()), "text") == "0"
    assert manager.format_report(TensorSumPayload(TensorSum()), "json") == "[]"


def test_values(manager):
    assert manager.format_report(ValuePayload(True), "json") == "true"
    assert manager.format_report(ValuePayload(False), "text") == "false"
    assert manager.format_report(ValuePayload(7), "text") == "7"


def test_surface_payload(manager):
    o_sym = preset(1, 1)
    payload = SurfacePayload(o_sym, invariants(o_sym), boundary_cycles(o_sym))
    data = json.loads(manager.format_report(payload, "json"))
    assert data == {
        "symbol": "a1.a2.A1.A2",
        "rank": 2,
        "euler_characteristic": -1,
        "boundary_components": 1,
        "genus": 1,
    }
    assert "genus: 1" in manager.format_report(payload, "text")


def test_html_wraps_markdown(manager, bracket_payload):
    html = manager.format_report(bracket_payload, "html")
    assert html.lstrip().startswith("<!DOCTYPE html>")
    assert "<table>" in html
    assert "Generated by ccurves" in html
