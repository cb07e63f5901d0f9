import json

import pytest

from koszulsign import ParseError, Permutation
from koszulsign.cli import main, parse_degrees, parse_perm


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestParseDegrees:
    def test_plain(self):
        assert parse_degrees("1,2,1,1,2") == (1, 2, 1, 1, 2)

    def test_signed_and_spaced(self):
        assert parse_degrees("-3, 0") == (-3, 0)
        assert parse_degrees("+4,7") == (4, 7)

    @pytest.mark.parametrize("text", ["1,", "", "1", "a,b", "1,,2", "1.5,2"])
    def test_errors(self, text):
        with pytest.raises(ParseError):
            parse_degrees(text)

    def test_error_reports_position(self):
        with pytest.raises(ParseError, match="position"):
            parse_degrees("1,x,2")


class TestParsePerm:
    def test_one_line(self):
        assert parse_perm("[2,5,3,1,4]", 5).images == (2, 5, 3, 1, 4)

    def test_single_cycle(self):
        assert parse_perm("(1 2)", 3).images == (2, 1, 3)

    def test_cycle_product_rightmost_first(self):
        assert parse_perm("(2 3)(1 2)", 3).images == (3, 1, 2)

    def test_identity_forms(self):
        assert parse_perm("e", 4).is_identity()
        assert parse_perm("()", 4).is_identity()

    def test_comma_separated_cycles(self):
        assert parse_perm("(1,2)", 3).images == (2, 1, 3)

    @pytest.mark.parametrize(
        "text",
        ["[1,1,2]", "[1,2]", "[0,1,2]", "(1 4)", "(1 1)", "[1,2,3", "(1 2", "12"],
    )
    def test_errors(self, text):
        with pytest.raises(ParseError):
            parse_perm(text, 3)

    def test_round_trip_one_line(self):
        for images in [(2, 5, 3, 1, 4), (1, 2, 3, 4, 5), (5, 4, 3, 2, 1)]:
            p = Permutation(images)
            assert parse_perm(p.one_line(), 5) == p

    def test_round_trip_cycles(self):
        for images in [(2, 5, 3, 1, 4), (2, 1, 3, 4, 5), (1, 2, 3, 4, 5)]:
            p = Permutation(images)
            assert parse_perm(p.cycle_string(), 5) == p


class TestSignCommand:
    def test_example_sign(self, capsys):
        code, out, _ = run(
            capsys, "sign", "--degrees", "1,1,1,1,1", "--perm", "[2,5,3,1,4]"
        )
        assert code == 0
        assert "sign = -1" in out
        assert "exponent mod 2 = 1" in out

    def test_json_fields(self, capsys):
        code, out, _ = run(
            capsys, "sign", "--degrees", "1,1,0", "--perm", "(1 2)", "--json"
        )
        assert code == 0
        data = json.loads(out)
        assert data == {
            "n": 3,
            "degrees": [1, 1, 0],
            "perm": "[2,1,3]",
            "sign": -1,
            "exponent_mod2": 1,
        }

    def test_json_and_text_agree(self, capsys):
        _, out_json, _ = run(
            capsys, "sign", "--degrees", "1,0,1,1", "--perm", "[4,3,2,1]", "--json"
        )
        _, out_text, _ = run(
            capsys, "sign", "--degrees", "1,0,1,1", "--perm", "[4,3,2,1]"
        )
        data = json.loads(out_json)
        assert f"sign = {data['sign']:+d}" in out_text

    def test_base_order(self, capsys):
        # kappa(s1, f') with f'=(f1,f3,f2): degrees (1,0,1) -> +1
        code, out, _ = run(
            capsys,
            "sign", "--degrees", "1,1,0", "--perm", "(1 2)",
            "--base-order", "(2 3)",
        )
        assert code == 0
        assert "sign = +1" in out

    def test_parse_error_exit_2(self, capsys):
        code, _, err = run(capsys, "sign", "--degrees", "1,x", "--perm", "[2,1]")
        assert code == 2
        assert "error" in err

    def test_unknown_flag_exit_2(self, capsys):
        code, _, _ = run(capsys, "sign", "--degrees", "1,1", "--perm", "[2,1]", "--bogus")
        assert code == 2


class TestSignWordCommand:
    def test_inverse_generator(self, capsys):
        code, out, _ = run(capsys, "sign-word", "--degrees", "1,1,0", "--word", "s1^-1")
        assert code == 0
        assert "sign = -1" in out

    def test_empty_word(self, capsys):
        code, out, _ = run(capsys, "sign-word", "--degrees", "1,1", "--word", "e")
        assert code == 0
        assert "sign = +1" in out

    def test_bad_word_exit_2(self, capsys):
        code, _, _ = run(capsys, "sign-word", "--degrees", "1,1", "--word", "s9")
        assert code == 2


class TestTableCommand:
    def test_lists_all_of_s3(self, capsys):
        code, out, _ = run(capsys, "table", "--degrees", "1,1,0")
        assert code == 0
        lines = [l for l in out.splitlines() if l and not l.startswith("#")]
        assert len(lines) == 6
        assert lines[0] == "0\t[1,2,3]\t+1"

    def test_byte_stable(self, capsys):
        _, out1, _ = run(capsys, "table", "--degrees", "1,0,1,1")
        _, out2, _ = run(capsys, "table", "--degrees", "1,0,1,1")
        assert out1 == out2

    def test_out_writes_delimited_and_figure(self, capsys, tmp_path):
        code, _, err = run(
            capsys, "table", "--degrees", "1,1,0", "--out", str(tmp_path)
        )
        assert code == 0
        csv_path = tmp_path / "sign_table.csv"
        png_path = tmp_path / "sign_table.png"
        assert csv_path.exists() and png_path.exists()
        rows = csv_path.read_text().splitlines()
        assert rows[0] == "sigma_rank,rho_rank,sign"
        assert len(rows) == 1 + 36
        assert png_path.stat().st_size > 0

    def test_resource_exit_3(self, capsys):
        code, _, _ = run(capsys, "table", "--degrees", ",".join("1" * 7))
        assert code == 3


class TestCheckCommands:
    def test_morphism_true(self, capsys):
        code, out, _ = run(capsys, "check-morphism", "--degrees", "0,2,4")
        assert code == 0
        assert "group morphism: True" in out

    def test_morphism_false_exit_1(self, capsys):
        code, out, _ = run(capsys, "check-morphism", "--degrees", "1,1,0")
        assert code == 1
        assert "group morphism: False" in out

    def test_cocycle_auto(self, capsys):
        code, out, _ = run(capsys, "check-cocycle", "--degrees", "1,1,1")
        assert code == 0
        assert "u = signature" in out
        assert "2-cocycle: True" in out

    def test_cocycle_no_structure(self, capsys):
        code, out, _ = run(capsys, "check-cocycle", "--degrees", "1,1,0")
        assert code == 1
        assert "no admissible module structure" in out

    def test_cocycle_wrong_structure(self, capsys):
        code, out, _ = run(capsys, "check-cocycle", "--degrees", "1,1,1", "--u", "one")
        assert code == 1
        assert "2-cocycle: False" in out


class TestExampleCommand:
    def test_terms(self, capsys):
        code, out, _ = run(capsys, "example")
        assert code == 0
        z_line = next(l for l in out.splitlines() if l.startswith("Z = "))
        terms = set(z_line[len("Z = "):].split(" + "))
        assert terms == {"z1z4", "z3z4", "z2z5", "z2z4", "z2z3"}
        assert "rho = [2,5,3,1,4]" in out
        assert "g = rho(f) = (f4, f1, f3, f5, f2)" in out

    def test_json(self, capsys):
        code, out, _ = run(capsys, "example", "--json")
        assert code == 0
        data = json.loads(out)
        assert sorted(map(tuple, data["terms"])) == [
            (1, 4), (2, 3), (2, 4), (2, 5), (3, 4),
        ]


class TestVerifyCommand:
    def test_small_run_exit_0(self, capsys):
        code, out, _ = run(capsys, "verify", "--n", "3", "--trials", "1", "--seed", "5")
        assert code == 0
        assert "overall: PASS" in out

    def test_json_output(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--n", "2", "--trials", "1", "--seed", "0", "--json"
        )
        assert code == 0
        assert json.loads(out)["ok"] is True

    def test_out_writes_report_files(self, capsys, tmp_path):
        code, _, _ = run(
            capsys, "verify", "--n", "2", "--trials", "1", "--out", str(tmp_path)
        )
        assert code == 0
        assert (tmp_path / "verify_report.csv").exists()
        assert (tmp_path / "verify_report.png").exists()

    def test_bound_exit_3(self, capsys):
        code, _, _ = run(capsys, "verify", "--n", "9")
        assert code == 3


class TestUsage:
    def test_no_command_exit_2(self, capsys):
        assert run(capsys, )[0] == 2

    def test_unknown_command_exit_2(self, capsys):
        assert run(capsys, "frobnicate")[0] == 2
