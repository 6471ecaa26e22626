import math

import pytest

import drsim


def test_partition():
    fp = drsim.build_partition(100.0, 3)
    assert len(fp) == 17
    assert fp.distance_factor == pytest.approx(100 / 6)
    assert sum(r.bounds.area for r in fp.regions) == pytest.approx(1e4)
    assert fp.locate((50, 50)) == 1
    ne = fp.region(fp.locate((99, 99)))
    assert ne.kind == drsim.RegionKind.CORNER
    assert ne.ring == 2
    assert fp.to_csv().splitlines()[0] == "region_id,kind,ring,min_x,min_y,max_x,max_y,mid_x,mid_y"
    with pytest.raises(IndexError):
        fp.locate((101, 50))


def test_radio():
    r = drsim.RadioParams()
    assert drsim.tx_energy(r, 4000, 10.0) == pytest.approx(2.04e-4, rel=1e-15)
    assert drsim.rx_energy(r, 4000) == pytest.approx(2.0e-4, rel=1e-15)
    assert drsim.agg_energy(r, 4000, 2) == pytest.approx(4.0e-5)
    assert r.d0 == pytest.approx(math.sqrt(10e-12 / 0.0013e-12))
    with pytest.raises(ValueError):
        drsim.tx_energy(r, -1, 10.0)


def test_run_and_determinism():
    c = drsim.SimConfig()
    c.max_rounds = 200
    a = drsim.run(c)
    b = drsim.run(c)
    assert len(a.series) == 200
    assert a.series[0].ch_count == 8
    assert a.to_csv() == b.to_csv()
    assert a.series[-1].cumulative_energy <= c.node_count * c.initial_energy


def test_experiment():
    c = drsim.SimConfig.from_text("runs = 2\nmax_rounds = 300\n")
    ex = drsim.experiment(c)
    assert [r.protocol for r in ex.runs] == [drsim.Protocol.DR] * 2 + [drsim.Protocol.LEACH_C] * 2 + [
        drsim.Protocol.LEACH
    ] * 2
    assert len(ex.improvements) == 3
    assert ex.to_csv().startswith("protocol,seed,fnd,hnd,lnd,total_packets\n")
    only = drsim.experiment(c, [drsim.Protocol.LEACH])
    assert len(only.runs) == 2


def test_config_errors():
    with pytest.raises(drsim.ConfigError, match="node_count"):
        drsim.SimConfig.from_text("node_count = 0\n", "x.cfg")
    c = drsim.SimConfig().with_overrides(["protocol=leach", "seed=9"])
    assert c.protocol == drsim.Protocol.LEACH
    assert c.seed == 9


def test_analytic_sweep():
    rows = drsim.analytic_sweep([0.01], [0.0, 0.5, 1.0])
    assert len(rows) == 3
    for row in rows:
        assert row.e_total == pytest.approx(row.e_is + row.e_cr + row.e_ms + row.e_os)
    assert rows[2].e_cr == 0.0
