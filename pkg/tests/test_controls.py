import pytest

from quasiline.controls import CONTROLS


@pytest.mark.parametrize("control", CONTROLS, ids=lambda c: c.name)
def test_control_caught_at_documented_tuple(control):
    ok, detail = control.evaluate()
    assert ok, detail
    assert control.check in detail


def test_controls_are_distinct():
    assert len({c.name for c in CONTROLS}) == len(CONTROLS)
