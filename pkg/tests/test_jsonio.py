import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from comatch.core import Comatching, InputError
from comatch.constructions import gen_cycle_sharpness, gen_torus_grid_complex
from comatch.jsonio import (
    certificate_from_doc,
    certificate_to_doc,
    complex_from_doc,
    complex_to_doc,
    detect_kind,
    dump_canonical,
    instance_from_doc,
    set_system_from_doc,
    set_system_to_doc,
)
from comatch.randsys import random_system
from comatch.search import comatching_with_intersection_number


def systems():
    return st.integers(0, 2**32 - 1).map(
        lambda seed: random_system(random.Random(seed), 6, 6)
    )


class TestSetSystemFormat:
    @settings(max_examples=100, deadline=None)
    @given(systems())
    def test_roundtrip_is_bit_exact_after_canonicalization(self, system):
        once = dump_canonical(set_system_to_doc(system))
        again = dump_canonical(
            set_system_to_doc(set_system_from_doc(json.loads(once)))
        )
        assert once == again

    def test_ground_sorted_member_order_preserved(self):
        doc = set_system_to_doc(
            set_system_from_doc(
                {
                    "ground": ["z", "a", "m"],
                    "members": [
                        {"name": "second", "elements": ["z"]},
                        {"name": "first", "elements": ["a", "z"]},
                    ],
                }
            )
        )
        assert doc["ground"] == ["a", "m", "z"]
        assert [m["name"] for m in doc["members"]] == ["second", "first"]
        assert doc["members"][1]["elements"] == ["a", "z"]

    def test_unknown_label_rejected(self):
        with pytest.raises(InputError):
            set_system_from_doc(
                {"ground": ["a"], "members": [{"name": "F", "elements": ["b"]}]}
            )

    def test_detect_kind(self):
        assert detect_kind({"ground": [], "members": []}) == "set_system"
        assert detect_kind({"vertices": [], "facets": []}) == "complex"
        with pytest.raises(InputError):
            detect_kind({"nonsense": 1})


class TestComplexFormat:
    def test_roundtrip_torus(self):
        torus = gen_torus_grid_complex(4, 2)
        loaded, notes = complex_from_doc(complex_to_doc(torus))
        assert notes == []
        assert set(loaded.facets) == set(torus.facets)

    def test_loader_reports_canonicalization(self):
        doc = {
            "vertices": ["a", "b", "c"],
            "facets": [["a"], ["a", "b"], ["a", "b"], ["c", "c"]],
        }
        loaded, notes = complex_from_doc(doc)
        assert set(loaded.facets) == {frozenset({0, 1}), frozenset({2})}
        assert any("dominated" in n for n in notes)
        assert any("duplicate" in n or "repeated" in n for n in notes)
        assert any("isolated" in n for n in notes)

    def test_empty_facet_rejected(self):
        with pytest.raises(InputError):
            complex_from_doc({"vertices": ["a"], "facets": [[]]})


class TestCertificates:
    def test_comatching_roundtrip(self):
        system = gen_cycle_sharpness(2)
        cert = Comatching(((2, 0), (0, 1)))
        doc = certificate_to_doc(cert, system=system)
        assert certificate_from_doc(doc, system=system) == cert

    def test_comatching_with_intersection_roundtrip(self):
        system = gen_cycle_sharpness(2)
        _, cert, _ = comatching_with_intersection_number(system)
        doc = certificate_to_doc(cert, system=system)
        assert certificate_from_doc(doc, system=system) == cert

    def test_unknown_member_name_rejected(self):
        system = gen_cycle_sharpness(2)
        with pytest.raises(InputError):
            certificate_from_doc(
                {"kind": "comatching", "pairs": [{"point": "1", "member": "Z"}]},
                system=system,
            )

    def test_instance_parsing(self):
        system = gen_cycle_sharpness(2)
        instance = instance_from_doc(
            {"families": [["A", "B"], ["C", "D"]]}, system
        )
        assert instance.families == (frozenset({0, 1}), frozenset({2, 3}))
