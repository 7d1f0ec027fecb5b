"""Identity registry: lookup, closed forms, verification drivers and the
versioned registry document."""

import json
from fractions import Fraction

import pytest

from harmonicsums import catalog
from harmonicsums.errors import DomainError, KindError, NotFound
from harmonicsums.precision import DEFAULT_CONTEXT, constants, working_precision

CTX = DEFAULT_CONTEXT


class TestLookup:
    def test_registry_size(self):
        assert len(catalog.list_identities()) >= 55

    def test_lookup_known(self):
        record = catalog.lookup("main")
        assert record.kind == "infinite_series"
        assert record.param_names == ("z",)

    def test_lookup_unknown(self):
        with pytest.raises(NotFound):
            catalog.lookup("no.such.identity")

    def test_internal_ids_hidden(self):
        ids = {r.id for r in catalog.list_identities()}
        assert not any(i.startswith("_") for i in ids)

    def test_kinds_partition(self):
        kinds = {r.kind for r in catalog.list_identities()}
        assert kinds == {"infinite_series", "finite_sum", "derived_scalar"}


class TestClosedForm:
    def test_euler(self):
        value = catalog.closed_form("thm3.euler")
        with working_precision(CTX.mantissa_bits):
            assert float(abs(value - 2 * constants(CTX).zeta3)) < 1e-30

    def test_parameterized(self):
        # main at z=1: zeta(2) - 1
        value = catalog.closed_form("main", {"z": 1})
        with working_precision(CTX.mantissa_bits):
            assert float(abs(value - (constants(CTX).zeta2 - 1))) < 1e-30

    def test_domain_error(self):
        with pytest.raises(DomainError):
            catalog.closed_form("main", {"z": -2})


class TestVerify:
    def test_basic(self):
        report = catalog.verify("main", {"z": 0})
        assert report.passed
        assert report.rel_error <= 1e-10

    def test_finite_identity(self):
        report = catalog.verify("frisch", {"n": 5, "z": Fraction(1, 2)})
        assert report.passed
        assert not report.accelerated

    def test_derived(self):
        report = catalog.verify("bowen")
        assert report.passed
        with working_precision(CTX.mantissa_bits):
            expected = float(Fraction(17, 4)) * float(constants(CTX).zeta4)
        assert abs(float(report.rhs_value) - expected) < 1e-12

    def test_domain_error_raised(self):
        with pytest.raises(DomainError):
            catalog.verify("main", {"z": -2})


class TestVerifyExact:
    def test_finite_pass(self):
        ok, lhs, rhs = catalog.verify_exact("bs", {"m": 4, "n": 3})
        assert ok and lhs == rhs

    def test_lemma1_coefficients(self):
        ok, lhs, rhs = catalog.verify_exact("lemma1.2", {"k": 3})
        assert ok
        assert lhs["zeta2"] == Fraction(-2)

    def test_infinite_rejected(self):
        with pytest.raises(KindError):
            catalog.verify_exact("main", {"z": 0})


class TestSweep:
    def test_continues_past_errors(self):
        reports = catalog.sweep("main", [{"z": 0}, {"z": -2}, {"z": 1}], CTX)
        assert len(reports) == 3
        assert reports[0].passed and reports[2].passed
        assert not reports[1].passed
        assert reports[1].error and "DomainError" in reports[1].error


class TestRegistryDocument:
    def test_serializable_and_versioned(self):
        doc = catalog.registry_document()
        blob = json.dumps(doc)
        again = json.loads(blob)
        assert again["version"] == catalog.REGISTRY_VERSION
        assert len(again["identities"]) >= 55
        ids = [i["id"] for i in again["identities"]]
        assert len(ids) == len(set(ids))
        for item in again["identities"]:
            assert item["provenance"]
            assert isinstance(item["canonical"], list) and item["canonical"]
