//! Acceptance checks, one line per criterion.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use fancross::catalog::{self, m};
use fancross::classify::*;
use fancross::embedding::map_isomorphic;
use fancross::enumerate::{enumerate_embeddings, EnumSpec};
use fancross::reroute::{fan_planarize, make_fan_crossing, RerouteTrace};
use fancross::{Embedding, Graph};

type Check = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<Duration, String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("{what} took {t:?}, limit {limit:?}"))?;
    Ok(t)
}

/// A rerouter result together with its input, for the validity and replay checks.
struct Run {
    label: String,
    input: Embedding,
    output: Embedding,
    trace: RerouteTrace,
}

struct Sweep {
    embeddings: Vec<(String, Embedding)>,
    elapsed: Duration,
}

fn sweep() -> Result<Sweep, String> {
    let start = Instant::now();
    let mut embeddings = Vec::new();
    for (name, g) in [
        ("K4", Graph::complete(4)),
        ("K5", Graph::complete(5)),
        ("W4", Graph::wheel(4)),
        ("prism", Graph::prism()),
    ] {
        let mut spec = EnumSpec::new(g, 4).deduped();
        spec.ceiling = Some(u128::MAX);
        let all = enumerate_embeddings(&spec).map_err(|err| format!("{name}: {err}"))?;
        embeddings.extend(all.into_iter().enumerate().map(|(i, e)| (format!("{name}#{i}"), e)));
    }
    Ok(Sweep { embeddings, elapsed: start.elapsed() })
}

fn criterion_1() -> Check {
    let k5 = catalog::k5_embeddings();
    let mut slowest = Duration::ZERO;
    for (i, e) in k5.iter().enumerate() {
        let name = (b'a' + i as u8) as char;
        let start = Instant::now();
        let r = verdicts(e);
        let tri = triangle_crossings_direct(e);
        slowest = slowest.max(within(start, Duration::from_secs(1), &format!("({name})"))?);
        let ok = match i {
            0 => r.one_planar && r.fan_crossing_free,
            1..=3 => r.fan_planar,
            _ => r.adjacency_crossing && !r.fan_crossing && tri.len() == 1 && tri[0].crossing_edges.len() == 1,
        };
        ensure(ok, || format!("({name}) has the wrong verdicts: {r:?}"))?;
    }
    Ok(format!("slowest {slowest:?}"))
}

fn criterion_2(runs: &mut Vec<Run>) -> Check {
    let k5 = catalog::k5_embeddings();
    let start = Instant::now();
    let (out, trace) = make_fan_crossing(&k5[4]).map_err(|err| err.to_string())?;
    let iso = map_isomorphic(&out, &k5[2]);
    let t = within(start, Duration::from_secs(1), "transformation")?;
    ensure(iso, || "result is not map-isomorphic to (c)".into())?;
    runs.push(Run { label: "K5 (e)".into(), input: k5[4].clone(), output: out, trace });
    Ok(format!("{t:?}"))
}

fn criterion_3(s: &Sweep, runs: &mut Vec<Run>) -> Check {
    let start = Instant::now();
    let mut count = 0;
    for (label, e) in &s.embeddings {
        if !is_adjacency_crossing(e) {
            continue;
        }
        let (out, trace) = make_fan_crossing(e).map_err(|err| format!("{label}: {err}"))?;
        ensure(out.is_valid() && out.graph == e.graph && is_fan_crossing(&out), || {
            format!("{label}: output is not a fan-crossing embedding of the same graph")
        })?;
        count += 1;
        runs.push(Run { label: label.clone(), input: e.clone(), output: out, trace });
    }
    let total = s.elapsed + start.elapsed();
    ensure(total < Duration::from_secs(300), || format!("sweep took {total:?}"))?;
    Ok(format!("{} embeddings, {count} adjacency-crossing, {total:?}", s.embeddings.len()))
}

fn criterion_4(s: &Sweep) -> Check {
    let mut adjacency = 0;
    for (label, e) in &s.embeddings {
        let adj = is_adjacency_crossing(e);
        let direct = triangle_crossing_edges(e);
        if adj {
            adjacency += 1;
            let via: std::collections::BTreeSet<_> =
                triangle_crossings_via_cover(e).map_err(|err| format!("{label}: {err}"))?.into_iter().collect();
            ensure(via == direct, || format!("{label}: via cover {via:?}, direct {direct:?}"))?;
        }
        ensure(is_fan_crossing(e) == (adj && direct.is_empty()), || format!("{label}: fan-crossing characterization fails"))?;
    }
    Ok(format!("{} embeddings, {adjacency} compared", s.embeddings.len()))
}

/// Base {0,1} with three edges from the apex 2: a family rich in
/// configuration II.
fn apex_fan_graph() -> Graph {
    Graph::new(6, [(0, 1), (2, 3), (2, 4), (2, 5), (0, 3), (1, 4), (1, 5), (0, 2)]).unwrap()
}

fn criterion_5(s: &Sweep, runs: &mut Vec<Run>) -> Check {
    let mut spec = EnumSpec::new(apex_fan_graph(), 4).deduped();
    spec.ceiling = Some(u128::MAX);
    let extra = enumerate_embeddings(&spec).map_err(|err| err.to_string())?;
    let mut inputs: Vec<(String, Embedding)> = s.embeddings.clone();
    inputs.extend(extra.into_iter().enumerate().map(|(i, e)| (format!("apex-fan#{i}"), e)));
    let mut instances = 0;
    for (label, e) in &inputs {
        if !is_fan_crossing(e) || config_ii_instances(e).map_or(true, |v| v.is_empty()) {
            continue;
        }
        instances += 1;
        let (out, trace) = fan_planarize(e).map_err(|err| format!("{label}: {err}"))?;
        ensure(is_fan_planar(&out) && (out.n(), out.m()) == (e.n(), e.m()), || format!("{label}: bad output"))?;
        runs.push(Run { label: label.clone(), input: e.clone(), output: out, trace });
    }
    let gm = catalog::graph_m();
    let start = Instant::now();
    let (out, trace) = fan_planarize(&gm).map_err(|err| format!("M: {err}"))?;
    let t = within(start, Duration::from_secs(30), "M")?;
    ensure(is_fan_planar(&out) && (out.n(), out.m()) == (gm.n(), gm.m()), || "M: bad output".into())?;
    runs.push(Run { label: "M".into(), input: gm, output: out, trace });
    Ok(format!("{instances} enumerated embeddings with configuration II, M in {t:?}"))
}

fn criterion_6(s: &Sweep) -> Check {
    let mut checked = 0;
    for (label, e) in &s.embeddings {
        if is_fan_crossing(e) {
            ensure(density(e).within, || format!("{label}: m > 5n - 10"))?;
            checked += 1;
        }
    }
    for x in catalog::entries() {
        ensure(density(&(x.build)()).within, || format!("{}: m > 5n - 10", x.name))?;
    }
    let d = density(&catalog::k7_embeddings()[0]);
    ensure(d.m == 21 && d.bound == 25 && d.within, || format!("K7: {d:?}"))?;
    Ok(format!("{checked} fan-crossing embeddings, K7 m = {} <= {}", d.m, d.bound))
}

fn criterion_7() -> Check {
    let k7 = catalog::k7_embeddings();
    let start = Instant::now();
    let all = k7.iter().all(catalog::fat_edge_connectivity);
    let t = within(start, Duration::from_secs(1), "connectivity")?;
    ensure(k7.len() == 3 && all, || "a K7 embedding is not connected by crossed edges".into())?;
    Ok(format!("{t:?}"))
}

fn criterion_8() -> Check {
    let start = Instant::now();
    let e = catalog::graph_m();
    ensure(e.is_valid() && is_fan_crossing(&e), || "M is not a valid fan-crossing embedding".into())?;
    let insts = config_ii_instances(&e).map_err(|err| err.to_string())?;
    let base = e.graph.find_edge(m::U, m::V).ok_or("no base")?;
    let tx = e.graph.find_edge(m::T, m::X).ok_or("no {t,x}")?;
    let ty = e.graph.find_edge(m::T, m::Y).ok_or("no {t,y}")?;
    let c = insts.iter().find(|c| c.base == base).ok_or("no instance on {u,v}")?;
    let mut want = vec![tx, ty];
    want.sort_unstable();
    ensure(c.apex == m::T && c.crossers() == want, || format!("instance {c:?}"))?;
    ensure(sign_from(&e, base, tx, m::T) != sign_from(&e, base, ty, m::T), || "crossers have equal signs".into())?;
    let t = within(start, Duration::from_secs(5), "M analysis")?;
    Ok(format!("{t:?}"))
}

fn criterion_9(runs: &[Run]) -> Check {
    let mut steps = 0;
    for r in runs {
        ensure(r.output.is_valid(), || format!("{}: invalid output", r.label))?;
        let replayed = r.trace.replay(&r.input).map_err(|err| format!("{}: {err}", r.label))?;
        ensure(replayed == r.output, || format!("{}: trace does not reproduce the output", r.label))?;
        steps += r.trace.steps.len();
    }
    Ok(format!("{} outputs, {steps} steps replayed", runs.len()))
}

fn main() -> ExitCode {
    let mut runs = Vec::new();
    let sweep = sweep();
    let from_sweep = |f: &dyn Fn(&Sweep) -> Check| match &sweep {
        Ok(s) => f(s),
        Err(err) => Err(err.clone()),
    };
    let mut results: Vec<Check> = vec![criterion_1(), criterion_2(&mut runs)];
    results.push(match &sweep {
        Ok(s) => criterion_3(s, &mut runs),
        Err(err) => Err(err.clone()),
    });
    results.push(from_sweep(&criterion_4));
    results.push(match &sweep {
        Ok(s) => criterion_5(s, &mut runs),
        Err(err) => Err(err.clone()),
    });
    results.push(from_sweep(&criterion_6));
    results.push(criterion_7());
    results.push(criterion_8());
    results.push(criterion_9(&runs));
    let mut failed = false;
    for (i, r) in results.iter().enumerate() {
        match r {
            Ok(detail) => println!("criterion {}: PASS ({detail})", i + 1),
            Err(reason) => {
                failed = true;
                println!("criterion {}: FAIL ({reason})", i + 1);
            }
        }
    }
    if failed {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
