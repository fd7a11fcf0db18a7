import json
import subprocess
import sys

import pytest

from phisigma.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out.strip()
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    payload = json.loads(out)
    payload.pop("timing", None)
    return code, payload


def test_census_plain(capsys):
    code, out = run(capsys, "census", "--limit", "10")
    assert code == 0
    assert out == "phi_values=6 sigma_values=6 common=4"


def test_census_json(capsys):
    code, payload = run_json(capsys, "census", "--limit", "10", "--json")
    assert code == 0
    assert payload == {"limit": 10, "squarefree_domain": False,
                       "phi_values": 6, "sigma_values": 6, "common": 4}


def test_census_csv(capsys, tmp_path):
    target = tmp_path / "census.csv"
    code, _ = run(capsys, "census", "--limit", "10", "--csv", "--out", str(target))
    assert code == 0
    lines = target.read_text().splitlines()
    assert lines[0] == "n,is_phi_value,is_sigma_value"
    assert len(lines) == 11


def test_census_workers_do_not_change_output(capsys):
    _, one = run_json(capsys, "census", "--limit", "20000", "--json")
    _, four = run_json(capsys, "census", "--limit", "20000", "--json",
                       "--workers", "4")
    assert one == four


def test_inverse_phi_plain(capsys):
    code, out = run(capsys, "inv-phi", "4")
    assert code == 0
    assert out == "5 8 10 12"


def test_inverse_sigma_json(capsys):
    code, payload = run_json(capsys, "inv-sigma", "24", "--json")
    assert code == 0
    assert payload == {"n": 24, "kind": "sigma", "count": 3,
                       "witnesses": [14, 15, 23]}


def test_popular(capsys):
    code, payload = run_json(capsys, "popular", "--limit", "2000", "--k", "6",
                             "--json")
    assert code == 0
    assert payload["count"] == len(payload["values"])
    assert all(v <= 2000 for v in payload["values"])


def test_chain_plain(capsys):
    code, out = run(capsys, "chain", "--y", "31", "--q", "3")
    assert code == 0
    assert out == "3 7 13 19 29 31"


def test_chain_json(capsys):
    code, payload = run_json(capsys, "chain", "--y", "31", "--q", "3", "--json")
    assert code == 0
    assert payload["members"] == [3, 7, 13, 19, 29, 31]
    assert payload["witnesses"]["13"] == [3, 13]


def test_forbidden(capsys):
    code, out = run(capsys, "forbidden", "--y", "31", "--roots", "3,5")
    assert code == 0
    assert out == "3 5 7 11 13 19 23 29 31"


def test_sq_count(capsys):
    code, out = run(capsys, "sq-count", "--x", "100", "--q", "3",
                    "--smooth-bound", "10")
    assert code == 0
    assert out == "13"


def test_sq_count_negative_shift(capsys):
    code, payload = run_json(capsys, "sq-count", "--x", "100", "--q", "3",
                             "--smooth-bound", "10", "--a", "-1", "--json")
    assert code == 0
    assert payload["count"] == 9


def test_sq_count_delta(capsys):
    # bound = x**(0.5 - delta) = 10000**0.25 = 10
    code, payload = run_json(capsys, "sq-count", "--x", "10000", "--q", "3",
                             "--delta", "0.25", "--json")
    assert code == 0
    assert payload["smooth_bound"] == 10


def test_sq_count_needs_bound_or_delta(capsys):
    code, _ = run(capsys, "sq-count", "--x", "100", "--q", "3")
    assert code == 64


def test_smooth_count(capsys):
    code, out = run(capsys, "smooth-count", "--x", "1000", "--bound", "5")
    assert code == 0
    assert out == "86"


def test_smooth_count_default_bound(capsys):
    # default bound is floor(log x); log(1000) ~ 6.9 -> 6
    code, payload = run_json(capsys, "smooth-count", "--x", "1000", "--json")
    assert code == 0
    assert payload["bound"] == 6


def test_exceptional(capsys):
    code, out = run(capsys, "exceptional", "--x", "100", "--y", "5",
                    "--smooth-bound", "10", "--gamma", "10.0")
    assert code == 0
    assert out == "2 3 5"
    code, out = run(capsys, "exceptional", "--x", "100", "--y", "5",
                    "--smooth-bound", "10", "--gamma", "0.1")
    assert code == 0
    assert out == ""


def test_construct_and_verify_round_trip(capsys, tmp_path):
    target = tmp_path / "cert.json"
    code, _ = run(capsys, "construct", "--x", "50", "--smooth-bound", "7",
                  "--out", str(target))
    assert code == 0
    payload = json.loads(target.read_text())
    assert payload["verified"] is True
    assert payload["source_primes"] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 41, 47]

    code, out = run(capsys, "verify-cert", str(target))
    assert code == 0
    assert out.startswith("certificate verified")


def test_verify_cert_rejects_tampering(capsys, tmp_path):
    target = tmp_path / "cert.json"
    run(capsys, "construct", "--x", "10", "--smooth-bound", "2",
        "--out", str(target))
    payload = json.loads(target.read_text())
    payload["a"] = [[2, 7]]  # phi(128) = 64 != 32
    target.write_text(json.dumps(payload))
    code, _ = run(capsys, "verify-cert", str(target))
    assert code == 2


def test_verify_cert_missing_file(capsys, tmp_path):
    code, _ = run(capsys, "verify-cert", str(tmp_path / "nope.json"))
    assert code == 1


def test_verify_cert_malformed_json(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _ = run(capsys, "verify-cert", str(bad))
    assert code == 1


def test_construct_not_liftable_exit(capsys):
    code, _ = run(capsys, "construct", "--x", "60", "--smooth-bound", "11",
                  "--roots", "3", "--drop-index", "2")
    assert code == 1


def test_marker_family(capsys):
    code, out = run(capsys, "marker-family", "--z", "31", "--theta", "0.3")
    assert code == 0
    assert out == "retained=29 family_size=2"


def test_marker_family_json(capsys):
    code, payload = run_json(capsys, "marker-family", "--z", "31",
                             "--theta", "0.3", "--json")
    assert code == 0
    assert payload["twin_pool"] == [5, 11, 17, 29]
    assert payload["family_size"] == 2
    assert all(c["verified"] for c in payload["sample_certificates"])


def test_collide_explicit_pool(capsys):
    code, payload = run_json(capsys, "collide", "--pool", "2,3,5,7",
                             "--size", "2", "--json")
    assert code == 0
    assert payload["value"] == 24
    assert payload["count"] == 2
    assert sorted(payload["representations"]) == [[2, 7], [3, 5]]


def test_collide_generated_pool(capsys):
    code, out = run(capsys, "collide", "--pool-limit", "200",
                    "--pool-smooth", "11", "--size", "4")
    assert code == 0
    assert out == "value=1451520 representations=79"


def test_collide_needs_a_pool(capsys):
    code, _ = run(capsys, "collide", "--size", "2")
    assert code == 64


def test_factorial(capsys):
    code, out = run(capsys, "factorial", "--k", "4")
    assert code == 0
    assert out == "A_positive=True B_positive=True phi_witness=35 sigma_witness=14"
    code, payload = run_json(capsys, "factorial", "--k", "2", "--json")
    assert code == 0
    assert payload["B_positive"] is False


def test_factorial_beyond_ceiling(capsys):
    code, _ = run(capsys, "factorial", "--k", "13")
    assert code == 1


def test_capacity_error_exit(capsys):
    code, _ = run(capsys, "census", "--limit", "1000000000")
    assert code == 1


def test_usage_errors(capsys):
    assert main(["census"]) == 64                 # missing --limit
    capsys.readouterr()
    assert main(["no-such-command"]) == 64
    capsys.readouterr()
    assert main([]) == 64
    capsys.readouterr()


def test_json_determinism(capsys):
    _, a = run_json(capsys, "chain", "--y", "1000", "--q", "3", "--json")
    _, b = run_json(capsys, "chain", "--y", "1000", "--q", "3", "--json")
    assert a == b


def test_out_flag_writes_file(capsys, tmp_path):
    target = tmp_path / "chain.txt"
    code, out = run(capsys, "chain", "--y", "31", "--q", "3", "--out", str(target))
    assert code == 0
    assert out == ""  # nothing on stdout when redirected
    assert target.read_text().strip() == "3 7 13 19 29 31"


def test_installed_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "phisigma.cli", "census", "--limit", "10", "--json"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["common"] == 4
