import json

import pytest

from isimplicial import fincat, idiag, operad, phicon, serialize
from isimplicial import sset as S


def z2():
    return fincat.group_category([0, 1], lambda a, b: (a + b) % 2, 0)


def roundtrip(value):
    text = serialize.dumps(serialize.encode(value))
    back = serialize.decode(json.loads(text))
    assert serialize.dumps(serialize.encode(back)) == text
    return back


def test_golden_nerve_of_z2(golden):
    text = serialize.dumps(serialize.encode(S.nerve(z2(), 3)))
    assert text == (golden / "nerve_z2_d3.json").read_text()


def test_golden_free_point_diagram(golden):
    text = serialize.dumps(serialize.encode(idiag.free_diagram(1, S.point(1), 2)))
    assert text == (golden / "free1_point_N2_d1.json").read_text()


@pytest.mark.parametrize("make", [
    lambda: z2(),
    lambda: S.product(S.standard(1, 2), S.boundary(1, 2)),
    lambda: idiag.free_diagram(1, S.standard(1, 1), 2),
    lambda: operad.barratt_eccles(2, 1),
    lambda: phicon.z2_signed(),
])
def test_roundtrips(make):
    roundtrip(make())


def test_decoded_diagram_behaves_like_the_original():
    X = idiag.free_diagram(1, S.point(2), 3)
    Y = roundtrip(X)
    assert idiag.sigma_free_on_levels(Y, 2)[0]


def test_bad_json_reports_location(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{"kind": "sset",\n "cap": }')
    with pytest.raises(serialize.FormatError, match="line 2"):
        serialize.load(p)


def test_invalid_simplicial_set_is_refused():
    data = serialize.encode(S.standard(1, 1))
    data["faces"][0][1][0] = [[99], [0]]
    with pytest.raises(serialize.FormatError):
        serialize.decode(data)


def test_unknown_kind():
    with pytest.raises(serialize.FormatError, match="unknown kind"):
        serialize.decode({"kind": "sheaf"})
