import pathlib
import runpy

import pytest

DEMOS = pathlib.Path(__file__).resolve().parent.parent / "demos"
FAST = ["01_two_site_charging.py", "02_power_vs_stark_field.py", "03_boson_vs_fermion_power.py"]


@pytest.mark.parametrize("name", FAST)
def test_demo_runs(name, capsys):
    runpy.run_path(str(DEMOS / name), run_name="__main__")
    assert capsys.readouterr().out.strip()


def test_all_demos_present():
    assert len(sorted(DEMOS.glob("*.py"))) == 5
