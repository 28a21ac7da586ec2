"""
Tests for the command-line front end
"""

import pytest
from hfr.cli import load_structure, main
from hfr.errors import UsageError
from hfr.satellites import whitehead_cfdr_framed
from hfr.type_a import TypeAModule, TypeDABimodule
from hfr.type_d import TypeDStructure


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestStructureSpecs:
    """Tests for structure arguments."""

    def test_families(self):
        """Family specs build the right kinds of object."""
        assert isinstance(load_structure("az:split:1"), TypeDStructure)
        assert isinstance(load_structure("azbar:split:1"), TypeDStructure)
        assert isinstance(load_structure("box-typeA"), TypeAModule)
        assert isinstance(load_structure("staircase-typeA:1"), TypeAModule)
        assert isinstance(load_structure("identity-da"), TypeDABimodule)

    def test_fixture_fallback(self):
        """Anything else is a fixture name."""
        assert load_structure("whitehead-framed") == whitehead_cfdr_framed()

    def test_bad_family_argument(self):
        """Malformed family arguments are usage errors."""
        with pytest.raises(UsageError):
            load_structure("staircase-typeA:x")


class TestCommands:
    """Tests for each subcommand."""

    def test_az(self, capsys):
        """Genus-one AZ module in one line."""
        code, out, _ = run(capsys, "az", "--pmc", "split:1")
        assert code == 0
        assert out.strip() == "2 generators, 1 arrow: ρ̃₂ —ρ₁→ ρ̃₁₂₃"

    def test_azbar(self, capsys):
        """Genus-one AZ-bar module in one line."""
        code, out, _ = run(capsys, "az", "--pmc", "split:1", "--side", "azbar")
        assert code == 0
        assert out.strip() == "2 generators, 1 arrow: ρ₁₂₃* —ρ₃→ ρ₂*"

    def test_satellite(self, capsys):
        """Whitehead double with the closed-form comparison."""
        code, out, _ = run(capsys, "satellite", "--pattern", "whitehead",
                           "--det", "3", "--tau", "1", "--compare-oracle")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "dim HFR = 7"
        assert lines[1] == "closed form = 7 (agrees)"

    def test_tensor(self, capsys):
        """Box module against the framed Whitehead pattern."""
        code, out, _ = run(capsys, "tensor", "--module", "box-typeA", "--structure", "whitehead-framed")
        assert code == 0
        assert "dim H = 8" in out.splitlines()

    def test_mor(self, capsys):
        """Morphisms from the genus-one AZ module to the thick torus."""
        code, out, _ = run(capsys, "mor", "--source", "az:split:1", "--target", "thick-torus")
        assert code == 0
        assert "dim H = 2" in out.splitlines()

    def test_fixtures_list(self, capsys):
        """The fixture list includes the staircase family."""
        code, out, _ = run(capsys, "fixtures", "--list")
        assert code == 0
        names = out.splitlines()
        assert "thick-torus" in names
        assert "staircase:<tau>" in names

    def test_fixtures_show(self, capsys):
        """Showing a fixture prints its size."""
        code, out, _ = run(capsys, "fixtures", "--show", "cable21-framed")
        assert code == 0
        assert out.startswith("2 generators, 1 arrow: x —ρ₂→ y")

    def test_dump_then_check(self, capsys, tmp_path):
        """A dumped structure can be checked from its file."""
        path = str(tmp_path / "unframed.hfr.json")
        code, out, _ = run(capsys, "simplify", "--structure", "whitehead-unframed", "--dump", path)
        assert code == 0
        assert out.startswith("5 -> 5 generators")
        code, out, _ = run(capsys, "check", "--structure", path)
        assert code == 0
        assert "structure relation: holds" in out
        assert "bounded: True" in out

    def test_check_type_a(self, capsys):
        """Type A modules are checked up to the requested length."""
        code, out, _ = run(capsys, "check", "--structure", "box-typeA", "--max-inputs", "3")
        assert code == 0
        assert "relations up to 3 inputs: hold" in out

    def test_reproduce_selected(self, capsys):
        """Selected acceptance checks."""
        code, out, _ = run(capsys, "reproduce", "--check", "1", "--check", "9")
        assert code == 0
        assert "2/2 checks passed" in out


class TestErrors:
    """Tests for exit codes and error messages."""

    def test_invalid_knot(self, capsys):
        """Invalid knot data exits 2 with the error class."""
        code, _, err = run(capsys, "satellite", "--pattern", "cable21", "--det", "2", "--tau", "0")
        assert code == 2
        assert err.startswith("error: InvariantViolation")

    def test_unknown_command(self, capsys):
        """Unknown subcommands are usage errors."""
        code, _, err = run(capsys, "frobnicate")
        assert code == 2
        assert "UsageError" in err

    def test_no_command(self, capsys):
        """No subcommand prints help."""
        code, out, _ = run(capsys)
        assert code == 2
        assert "usage" in out

    def test_reproduce_needs_selection(self, capsys):
        """reproduce without --all or --check is refused."""
        code, _, err = run(capsys, "reproduce")
        assert code == 2
        assert "UsageError" in err

    def test_unknown_check(self, capsys):
        """Unknown check numbers are usage errors."""
        code, _, err = run(capsys, "reproduce", "--check", "42")
        assert code == 2
        assert "UsageError" in err

    def test_unknown_fixture(self, capsys):
        """Unknown fixtures exit 2."""
        code, _, err = run(capsys, "fixtures", "--show", "trefoil")
        assert code == 2
        assert "InvariantViolation" in err

    def test_nonsymmetric_circle(self, capsys):
        """AZ modules need a real circle."""
        code, _, err = run(capsys, "az", "--pmc", "8;[1-3,2-6,4-7,5-8]")
        assert code == 2
        assert "NotSymmetric" in err


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
