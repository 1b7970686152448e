"""HTTP API: request/response shapes, error mapping, exact text payloads."""


class TestHealth:
    def test_health(self, client):
        resp = client.get("/health")
        assert resp.status_code == 200
        assert resp.json()["status"] == "ok"


class TestBracketEndpoint:
    def test_centerless(self, client):
        resp = client.post("/bracket", json={"x": "L(1)", "y": "L(2)"})
        assert resp.status_code == 200
        assert resp.json() == {"result": "L(3)"}

    def test_central(self, client):
        resp = client.post(
            "/bracket", json={"x": "L(2)", "y": "L(-2)", "central": True}
        )
        assert resp.json() == {"result": "-4*L(0) + 1/2*CL"}

    def test_central_generator_in_centerless_mode_is_400(self, client):
        resp = client.post("/bracket", json={"x": "CL", "y": "L(0)"})
        assert resp.status_code == 400
        assert resp.json()["detail"]["kind"] == "mode"

    def test_parse_error_is_422_with_column(self, client):
        resp = client.post("/bracket", json={"x": "1/0*L(1)", "y": "L(0)"})
        assert resp.status_code == 422
        detail = resp.json()["detail"]
        assert detail["kind"] == "parse"
        assert detail["column"] == 3


class TestCobracketEndpoint:
    def test_coboundary(self, client):
        resp = client.post(
            "/cobracket", json={"x": "L(3)", "r_a": "L(0)", "r_b": "L(2)"}
        )
        assert resp.status_code == 200
        body = resp.json()
        assert body["is_zero"] is False
        assert any(term["factors"] == ["L(3)", "L(2)"] for term in body["terms"])

    def test_delta(self, client):
        resp = client.post(
            "/cobracket",
            json={"x": "L(3)", "alpha": "1", "beta": "0", "gamma": "0"},
        )
        body = resp.json()
        assert body["text"] == "3*I(0)(x)I(3) - 3*I(3)(x)I(0)"

    def test_must_choose_exactly_one_kind(self, client):
        resp = client.post("/cobracket", json={"x": "L(0)"})
        assert resp.status_code == 422
        resp = client.post(
            "/cobracket",
            json={"x": "L(0)", "r_a": "L(0)", "r_b": "L(1)", "alpha": "1", "beta": "0", "gamma": "0"},
        )
        assert resp.status_code == 422

    def test_incomplete_r_pair(self, client):
        resp = client.post("/cobracket", json={"x": "L(0)", "r_a": "L(0)"})
        assert resp.status_code == 422


class TestCybeEndpoints:
    def test_defect_zero(self, client):
        resp = client.post("/cybe", json={"a": "L(0)", "b": "L(3)"})
        assert resp.json()["is_zero"] is True
        assert resp.json()["text"] == "0"

    def test_defect_nonzero_terms(self, client):
        resp = client.post("/cybe", json={"a": "L(0)", "b": "L(2) + I(1)"})
        body = resp.json()
        assert body["is_zero"] is False
        assert {"factors": ["L(2)", "I(1)", "L(0)"], "coeff": "-1"} in body["terms"]

    def test_scan_rows_and_lines(self, client):
        resp = client.post(
            "/cybe-scan",
            json={"m_lo": 2, "m_hi": 2, "n_lo": 1, "n_hi": 1, "q": ["0", "1"]},
        )
        body = resp.json()
        assert body["all_agree"] is True
        assert [row["line"] for row in body["rows"]] == [
            "m=2 n=1 q=0 cybe=ZERO predicted=ZERO agree=YES",
            "m=2 n=1 q=1 cybe=NONZERO predicted=NONZERO agree=YES",
        ]

    def test_scan_empty_range_is_400(self, client):
        resp = client.post(
            "/cybe-scan",
            json={"m_lo": 1, "m_hi": 0, "n_lo": 0, "n_hi": 0, "q": ["1"]},
        )
        assert resp.status_code == 400


class TestDualBracketEndpoint:
    def test_closed_form_with_oracle(self, client):
        resp = client.post(
            "/dual-bracket",
            json={
                "family": "T43",
                "params": {"m": "2", "q": "1"},
                "i": "V,1",
                "j": "W,5",
                "check_oracle": True,
                "window": 14,
            },
        )
        body = resp.json()
        assert body["result"] == "2*eps(V,4) - 3*eps(W,3)"
        assert body["oracle"] == body["result"]
        assert body["agree"] is True
        assert body["terms"] == [
            {"sector": "V", "degree": 4, "coeff": "2"},
            {"sector": "W", "degree": 3, "coeff": "-3"},
        ]

    def test_oracle_not_run_by_default(self, client):
        resp = client.post(
            "/dual-bracket",
            json={"family": "T42", "params": {"m": "2"}, "i": "V,1", "j": "V,4"},
        )
        body = resp.json()
        assert body["result"] == "eps(V,2)"
        assert body["oracle"] is None and body["agree"] is None

    def test_degenerate_family_is_400(self, client):
        resp = client.post(
            "/dual-bracket",
            json={"family": "T42", "params": {"m": "0"}, "i": "V,1", "j": "V,4"},
        )
        assert resp.status_code == 400
        assert resp.json()["detail"]["kind"] == "degenerate-family"

    def test_missing_family_parameter_is_422(self, client):
        resp = client.post(
            "/dual-bracket", json={"family": "T43", "params": {}, "i": "V,1", "j": "V,4"}
        )
        assert resp.status_code == 422

    def test_window_too_small_is_400(self, client):
        resp = client.post(
            "/dual-bracket",
            json={
                "family": "T42",
                "params": {"m": "4"},
                "i": "V,1",
                "j": "V,-4",
                "check_oracle": True,
                "window": 9,
            },
        )
        assert resp.status_code == 400
        assert resp.json()["detail"]["kind"] == "window-too-small"


class TestDualCobracketEndpoint:
    def test_entries(self, client):
        resp = client.post(
            "/dual-cobracket", json={"sector": "V", "m": 2, "window": 4}
        )
        body = resp.json()
        lines = [entry["line"] for entry in body["entries"]]
        assert "i=eps(V,0) j=eps(V,3) coeff=3" in lines
        # first-copy source never produces mixed-sector pairs
        assert all("eps(W" not in line for line in lines)

    def test_w_sector_mixed_pairs(self, client):
        resp = client.post(
            "/dual-cobracket", json={"sector": "W", "m": 2, "window": 4}
        )
        lines = [entry["line"] for entry in resp.json()["entries"]]
        assert "i=eps(V,1) j=eps(W,2) coeff=2" in lines
        assert "i=eps(W,1) j=eps(V,2) coeff=-1" in lines

    def test_unknown_sector_is_422(self, client):
        resp = client.post("/dual-cobracket", json={"sector": "Q", "m": 0})
        assert resp.status_code == 422


class TestVerifyEndpoint:
    def test_single_suite(self, client):
        resp = client.post("/verify", json={"suite": "antisymmetry", "window": 2})
        body = resp.json()
        assert body["all_pass"] is True
        assert len(body["reports"]) == 1
        report = body["reports"][0]
        assert report["check_id"] == "antisymmetry"
        assert report["lines"][0].startswith("check=antisymmetry window=2")

    def test_suite_with_q_override(self, client):
        resp = client.post(
            "/verify",
            json={"suite": "cybe_classification", "window": 2, "q": ["0", "7/2"]},
        )
        assert resp.json()["reports"][0]["params"] == "q=[0,7/2]"

    def test_unknown_suite_is_400(self, client):
        resp = client.post("/verify", json={"suite": "nope", "window": 4})
        assert resp.status_code == 400

    def test_run_all_window_gate(self, client):
        resp = client.post("/verify", json={"window": 3})
        assert resp.status_code == 400


class TestRecurEndpoint:
    def test_fibonacci_lines(self, client):
        resp = client.post(
            "/recur",
            json={
                "coeffs": ["1", "1"],
                "anchor": 0,
                "seed": ["0", "1"],
                "lo": -2,
                "hi": 5,
            },
        )
        lines = [v["line"] for v in resp.json()["values"]]
        assert lines[0] == "n=-2 f=-1"
        assert lines[-1] == "n=5 f=5"

    def test_zero_trailing_coefficient_is_400(self, client):
        resp = client.post(
            "/recur",
            json={"coeffs": ["1", "0"], "anchor": 0, "seed": ["0", "1"], "lo": 0, "hi": 1},
        )
        assert resp.status_code == 400

    def test_bad_rational_is_422(self, client):
        resp = client.post(
            "/recur",
            json={"coeffs": ["x"], "anchor": 0, "seed": ["1"], "lo": 0, "hi": 1},
        )
        assert resp.status_code == 422

    def test_empty_range_is_400(self, client):
        resp = client.post(
            "/recur",
            json={"coeffs": ["1"], "anchor": 0, "seed": ["1"], "lo": 2, "hi": 1},
        )
        assert resp.status_code == 400
