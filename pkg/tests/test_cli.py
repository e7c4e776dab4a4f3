import json

import pytest

from qnarayana import cli, fixtures
from qnarayana.cli import REGISTRY_SIZE, Command, build_registry, main, parse_args


class TestParseArgs:
    def test_verify_command(self):
        cmd = parse_args(["verify", "--identity", "eq25", "--order", "20"])
        assert cmd == Command("verify", {"all": False, "identity": ["eq25"], "order": 20, "json": False})

    def test_poly_command(self):
        cmd = parse_args(["poly", "--family", "c", "--n", "5"])
        assert cmd.verb == "poly"
        assert cmd.options["family"] == "c"
        assert cmd.options["n"] == 5

    def test_bad_shift_is_usage_error(self):
        with pytest.raises(SystemExit) as err:
            parse_args(["hankel", "--family", "c", "--shift", "2"])
        assert err.value.code == 2

    def test_unknown_verb(self):
        assert main(["frobnicate"]) == 2

    def test_missing_required_option(self):
        assert main(["poly", "--n", "3"]) == 2

    def test_non_integer_option(self):
        assert main(["poly", "--family", "c", "--n", "five"]) == 2

    def test_negative_n(self):
        assert main(["poly", "--family", "c", "--n", "-1"]) == 2

    def test_unknown_identity(self):
        assert main(["verify", "--identity", "eq99"]) == 2

    def test_all_and_identity_conflict(self):
        assert main(["verify", "--all", "--identity", "eq15"]) == 2

    def test_oracle_guard(self):
        assert main(["oracle", "--q-max-n", "11"]) == 2


class TestPolyVerb:
    def test_signed_family(self, capsys):
        assert main(["poly", "--family", "c", "--n", "5"]) == 0
        assert capsys.readouterr().out == "1+2t+4t^2+2t^3+t^4\n"

    def test_narayana_family(self, capsys):
        assert main(["poly", "--family", "C", "--n", "4"]) == 0
        assert capsys.readouterr().out == "1+6t+6t^2+t^3\n"

    def test_json_output(self, capsys):
        assert main(["poly", "--family", "B", "--n", "2", "--json"]) == 0
        assert json.loads(capsys.readouterr().out) == {"var": "t", "coeffs": ["1", "4", "1"]}

    def test_catalan_family(self, capsys):
        assert main(["poly", "--family", "catalan", "--n", "6"]) == 0
        assert capsys.readouterr().out == "132\n"


class TestHankelVerb:
    def test_csv(self, capsys):
        assert main(["hankel", "--family", "c", "--shift", "1", "--max-n", "3", "--csv"]) == 0
        assert capsys.readouterr().out == (
            "n,shift,family,determinant,expected,match\n"
            "1,1,small_c,1,1,true\n"
            "2,1,small_c,-t,-t,true\n"
            "3,1,small_c,-t^3,-t^3,true\n"
        )

    def test_text(self, capsys):
        assert main(["hankel", "--family", "C", "--max-n", "2"]) == 0
        out = capsys.readouterr().out
        assert "n=2 det=t expected=t match" in out

    def test_json(self, capsys):
        assert main(["hankel", "--family", "c", "--max-n", "2", "--json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["family"] == "small_c"
        assert payload["rows"][1] == {"n": 2, "determinant": "t", "expected": "t", "match": True}


class TestCfracVerb:
    def test_text(self, capsys):
        assert main(["cfrac", "--family", "g", "--depth", "2"]) == 0
        out = capsys.readouterr().out
        assert "s_0 extracted=1+t expected=1+t match" in out
        assert "t_1 extracted=-t expected=-t match" in out

    def test_json(self, capsys):
        assert main(["cfrac", "--family", "c", "--depth", "2", "--json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["status"] == "pass"
        assert payload["coefficients"][0] == {
            "kind": "s", "level": 0, "extracted": "1", "expected": "1", "status": "pass",
        }


class TestVerifyVerb:
    def test_single_identity(self, capsys):
        assert main(["verify", "--identity", "eq25", "--order", "8"]) == 0
        out = capsys.readouterr().out
        assert "PASS identity/eq25" in out

    def test_default_scope_is_polynomial_and_identity_checks(self, capsys):
        assert main(["verify", "--order", "6"]) == 0
        out = capsys.readouterr().out
        assert "PASS first_terms/c" in out
        assert "PASS identity/eq28" in out
        assert "hankel/" not in out
        assert "oracle/" not in out

    def test_identity_json_uses_report_schema(self, capsys):
        assert main(["verify", "--identity", "eq15", "--order", "6", "--json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["status"] == "pass"
        assert payload["reports"] == [{"identity": "eq15", "order": 6, "status": "pass"}]

    def test_all_json_lists_checks(self, capsys):
        assert main(["verify", "--order", "6", "--json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["status"] == "pass"
        assert {"name": "identity/eq15", "status": "pass", "detail": "order=6"} in payload["checks"]


class TestOracleVerb:
    def test_small_run(self, capsys):
        assert main(["oracle", "--q-max-n", "4", "--sym-max-n", "6"]) == 0
        out = capsys.readouterr().out
        assert "PASS oracle/valley_major" in out
        assert "PASS oracle/symmetric_valleys" in out
        assert "PASS oracle/counts" in out


class TestRegistry:
    def test_size_is_pinned(self):
        registry = build_registry()
        assert len(registry) == REGISTRY_SIZE
        names = [name for name, _ in registry]
        assert len(set(names)) == len(names)

    def test_verify_all_lists_every_registered_check(self, capsys):
        assert main(["verify", "--all"]) == 0
        out = capsys.readouterr().out
        for name, _ in build_registry():
            assert f"PASS {name}" in out
        assert f"{REGISTRY_SIZE}/{REGISTRY_SIZE} checks passed" in out

    def test_results_carry_registered_names(self):
        for name, fn in build_registry(order=4):
            if name.startswith(("identity/", "first_terms/", "routes/", "eval/")):
                assert fn().name == name

    def test_determinism(self, capsys):
        assert main(["verify", "--order", "6"]) == 0
        first = capsys.readouterr().out
        assert main(["verify", "--order", "6"]) == 0
        second = capsys.readouterr().out
        assert first == second


class TestFaultInjection:
    def test_mutated_first_terms_fixture_flips_exit_code(self, capsys, monkeypatch):
        broken = list(fixtures.FIRST_TERMS_SMALL_C)
        broken[5] = "1+2t+5t^2+2t^3+t^4"
        monkeypatch.setattr(fixtures, "FIRST_TERMS_SMALL_C", tuple(broken))
        assert main(["verify", "--all"]) == 1
        out = capsys.readouterr().out
        assert "FAIL first_terms/c" in out

    def test_mutated_cfrac_fixture_flips_exit_code(self, capsys, monkeypatch):
        monkeypatch.setattr(fixtures, "SMALLG_T_BASE", (0, 1))
        assert main(["verify", "--all"]) == 1
        out = capsys.readouterr().out
        assert "FAIL cfrac/smallg/closed_forms" in out

    def test_crashing_check_is_reported_as_failure(self, capsys, monkeypatch):
        def boom():
            raise RuntimeError("injected")

        monkeypatch.setattr(cli, "_check_routes", boom)
        assert main(["verify"]) == 1
        assert "FAIL routes/c_three_ways (error: injected)" in capsys.readouterr().out
