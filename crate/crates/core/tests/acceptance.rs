//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//!
//! Run with `cargo test -p water-spin --test acceptance`.

mod common;

use std::f64::consts::SQRT_2;
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use water_spin::channels::{
    block_dephasing, collective_unitary, depolarizing, haar_su2, werner_twirl_exact,
    werner_twirl_mc, KrausChannel, UnitarySampler, WernerParams,
};
use water_spin::isomer::{
    adsorption_event, is_entangled, magnetization, negativity, ortho_para_ratio, para_fraction,
    rho_gas, rho_gas_mixed_variant, rho_liq, GasMixParams, SpinAxis,
};
use water_spin::qcore::{
    basis_ket, density_from_ket, fidelity_with_ket, gas_pure_state, partial_trace, purify, purity,
    singlet, trace_distance, BipartiteSplit, ComplexMatrix, DensityMatrix, Subsystem,
};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn gas(p: f64) -> DensityMatrix {
    rho_gas(GasMixParams::new(p).unwrap())
}

fn liq(p: f64) -> DensityMatrix {
    rho_liq(WernerParams::new(p).unwrap())
}

fn ac01_gas_para_ortho() -> Check {
    let rho = density_from_ket(&gas_pure_state()).map_err(|e| e.to_string())?;
    let para = para_fraction(&rho).map_err(|e| e.to_string())?;
    let ratio = ortho_para_ratio(&rho).map_err(|e| e.to_string())?;
    ensure((para - 0.25).abs() <= 1e-12, || format!("para = {para}"))?;
    ensure((ratio - 3.0).abs() <= 1e-12, || {
        format!("ortho/para = {ratio}")
    })?;
    Ok(format!("para = {para}, ortho/para = {ratio}"))
}

fn ac02_singlet_collective_invariance() -> Check {
    let s = density_from_ket(&singlet()).unwrap();
    let mut sampler = UnitarySampler::new(2);
    let mut worst = 1.0_f64;
    for _ in 0..1000 {
        let u = haar_su2(&mut sampler);
        let out = collective_unitary(&u)
            .unwrap()
            .apply(&s)
            .map_err(|e| e.to_string())?;
        worst = worst.min(fidelity_with_ket(&out, &singlet()).unwrap());
    }
    ensure(worst >= 1.0 - 1e-10, || format!("min fidelity {worst}"))?;
    Ok(format!("min fidelity over 1000 Haar U = {worst:.15}"))
}

fn ac03_werner_collective_invariance() -> Check {
    let mut worst = 0.0_f64;
    for (i, p) in [-1.0 / 3.0, 0.0, 1.0 / 3.0, 0.7, 1.0]
        .into_iter()
        .enumerate()
    {
        let w = liq(p);
        let mut sampler = UnitarySampler::new(300 + i as u64);
        for _ in 0..1000 {
            let u = haar_su2(&mut sampler);
            let out = collective_unitary(&u)
                .unwrap()
                .apply(&w)
                .map_err(|e| e.to_string())?;
            worst = worst.max(trace_distance(&out, &w).unwrap());
        }
    }
    ensure(worst <= 1e-10, || format!("max trace distance {worst:.3e}"))?;
    Ok(format!("max trace distance = {worst:.3e}"))
}

fn ac04_nmr_silence() -> Check {
    let mut worst = 0.0_f64;
    for k in 0..21 {
        let p = -1.0 / 3.0 + k as f64 * (4.0 / 3.0) / 20.0;
        let w = liq(p.min(1.0));
        for axis in SpinAxis::ALL {
            worst = worst.max(magnetization(&w, axis).unwrap().abs());
        }
    }
    ensure(worst <= 1e-12, || format!("max |<S>| = {worst:.3e}"))?;
    Ok(format!(
        "max |Tr(rho S_a)| over 21 p' x 3 axes = {worst:.3e}"
    ))
}

fn ac05_gas_to_liquid_contraction() -> Check {
    for k in 0..100 {
        let p = k as f64 / 100.0;
        let (w, _) = werner_twirl_exact(&gas(p)).unwrap();
        let expected = (4.0 * p - 1.0) / 3.0;
        ensure((w.p_prime() - expected).abs() <= 1e-12, || {
            format!("p = {p}: p' = {} vs {expected}", w.p_prime())
        })?;
        ensure(w.p_prime() < p, || format!("p' >= p at p = {p}"))?;
    }
    let start = Instant::now();
    let mut worst = 0.0_f64;
    for k in 0..=10 {
        let p = k as f64 / 10.0;
        let rho = gas(p);
        let mc = werner_twirl_mc(&rho, 100_000, 2024).unwrap();
        let (_, exact) = werner_twirl_exact(&rho).unwrap();
        worst = worst.max(trace_distance(&mc, &exact).unwrap());
    }
    let elapsed = start.elapsed();
    ensure(worst <= 5e-3, || {
        format!("MC vs exact trace distance {worst:.3e}")
    })?;
    ensure(elapsed <= Duration::from_secs(10), || {
        format!("MC runtime {elapsed:?}")
    })?;
    Ok(format!(
        "p' = (4p-1)/3 < p on 100 points; MC(1e5) max trace distance = {worst:.3e} in {elapsed:.2?}"
    ))
}

fn ac06_superselection() -> Check {
    let psi = density_from_ket(&gas_pure_state()).unwrap();
    let out = block_dephasing().apply(&psi).map_err(|e| e.to_string())?;
    let d = trace_distance(&out, &gas(0.25)).unwrap();
    ensure(d <= 1e-12, || format!("trace distance {d:.3e}"))?;
    Ok(format!("trace distance to rho_gas(0.25) = {d:.3e}"))
}

fn ac07_depolarization_endpoint() -> Check {
    let ch = depolarizing(1.0).unwrap();
    let mixed = DensityMatrix::maximally_mixed(4);
    let mut r = common::rng(7);
    let mut states = vec![
        gas(0.0),
        gas(0.9),
        rho_gas_mixed_variant(GasMixParams::new(0.4).unwrap()),
        liq(-1.0 / 3.0),
        liq(1.0),
        density_from_ket(&gas_pure_state()).unwrap(),
        density_from_ket(&basis_ket(4, 0).unwrap()).unwrap(),
    ];
    states.extend((0..10).map(|_| common::random_density(&mut r, 4, 4)));
    let mut worst = 0.0_f64;
    for rho in &states {
        let out = ch.apply(rho).map_err(|e| e.to_string())?;
        worst = worst.max(trace_distance(&out, &mixed).unwrap());
    }
    ensure(worst <= 1e-12, || {
        format!("max distance to I/4 {worst:.3e}")
    })?;
    Ok(format!(
        "{} states, max trace distance to I/4 = {worst:.3e}",
        states.len()
    ))
}

fn ac08_entanglement_threshold() -> Check {
    let third = 1.0 / 3.0;
    ensure(!is_entangled(&liq(third)), || {
        "entangled at p' = 1/3".into()
    })?;
    for k in -50i32..=50 {
        let p = third + k as f64 * 1e-6;
        let e = is_entangled(&liq(p));
        ensure(e == (k > 0), || format!("p' = {p}: entangled = {e}"))?;
    }
    let mut worst = 0.0_f64;
    for k in 1..=100 {
        let p = third + (1.0 - third) * k as f64 / 100.0;
        let n = negativity(&liq(p)).unwrap();
        worst = worst.max((n - (3.0 * p - 1.0) / 4.0).abs());
    }
    ensure(worst <= 1e-12, || format!("negativity error {worst:.3e}"))?;
    Ok(format!(
        "flip at 1/3 on 1e-6 bracket; max |N - (3p'-1)/4| = {worst:.3e}"
    ))
}

fn ac09_freed_molecule_is_mixed() -> Check {
    let mut worst = 0.0_f64;
    for k in 1..=9 {
        let p = k as f64 / 10.0;
        let out = adsorption_event(GasMixParams::new(p).unwrap()).map_err(|e| e.to_string())?;
        let pur = purity(&out.reduced);
        let expected = p * p + (1.0 - p) * (1.0 - p);
        worst = worst.max((pur - expected).abs());
        ensure(pur < 1.0, || format!("purity {pur} at p = {p}"))?;
    }
    ensure(worst <= 1e-10, || format!("purity error {worst:.3e}"))?;
    Ok(format!(
        "p = 0.1..0.9: max |purity - (p^2+(1-p)^2)| = {worst:.3e}"
    ))
}

fn ac10_purification_round_trip() -> Check {
    let mut r = common::rng(10);
    let mut worst = 0.0_f64;
    for i in 0..100 {
        let dim = if i % 2 == 0 { 2 } else { 4 };
        let rho = common::random_density(&mut r, dim, 1 + i % dim);
        let joint = purify(&rho).map_err(|e| e.to_string())?;
        let back = partial_trace(
            &density_from_ket(&joint).unwrap(),
            BipartiteSplit::new(dim, dim).unwrap(),
            Subsystem::A,
        )
        .map_err(|e| e.to_string())?;
        worst = worst.max(trace_distance(&rho, &back).unwrap());
    }
    ensure(worst <= 1e-10, || format!("max trace distance {worst:.3e}"))?;
    Ok(format!(
        "100 random states, max trace distance = {worst:.3e}"
    ))
}

fn ac11_cptp_verification() -> Check {
    let mut sampler = UnitarySampler::new(11);
    let mut channels = vec![
        ("identity", KrausChannel::identity(4)),
        ("block_dephasing", block_dephasing()),
        (
            "collective_unitary",
            collective_unitary(&haar_su2(&mut sampler)).unwrap(),
        ),
    ];
    for q in [0.0, 0.25, 0.5, 1.0] {
        channels.push(("depolarizing", depolarizing(q).unwrap()));
    }
    for (name, ch) in &channels {
        ensure(ch.verify_cptp(1e-10), || {
            format!("{name} failed verification")
        })?;
    }
    let broken = KrausChannel::new(vec![ComplexMatrix::identity(4).scale_real(0.5)]).unwrap();
    ensure(!broken.verify_cptp(1e-10), || {
        "broken channel passed".into()
    })?;
    Ok(format!(
        "{} built-in channels pass; 0.5*I rejected",
        channels.len()
    ))
}

fn ac12_cli_determinism() -> Check {
    let golden_dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let cfg = golden_dir.join("sweep_3pt.json");
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut outputs = Vec::new();
    for run in 0..2 {
        let out = dir.path().join(format!("run{run}.csv"));
        let status = Command::new(env!("CARGO_BIN_EXE_water-spin"))
            .args([
                "sweep",
                "--config",
                cfg.to_str().unwrap(),
                "--output",
                out.to_str().unwrap(),
            ])
            .status()
            .map_err(|e| e.to_string())?;
        ensure(status.code() == Some(0), || format!("exit status {status}"))?;
        outputs.push(std::fs::read(&out).map_err(|e| e.to_string())?);
    }
    ensure(outputs[0] == outputs[1], || "two runs differ".into())?;
    let golden = std::fs::read(golden_dir.join("sweep_3pt.csv")).map_err(|e| e.to_string())?;
    ensure(outputs[0] == golden, || {
        "output differs from golden file".into()
    })?;

    let text = String::from_utf8(golden).unwrap();
    let mut lines = text.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    let mut checked = 0;
    for line in lines {
        let cells: Vec<&str> = line.split(',').collect();
        let get = |name: &str| cells[header.iter().position(|h| *h == name).unwrap()];
        let p: f64 = get("p").parse().unwrap();
        let pp = (4.0 * p - 1.0) / 3.0;
        let entropy = if p == 0.0 || p == 1.0 {
            0.0
        } else {
            -p * p.log2() - (1.0 - p) * (1.0 - p).log2()
        };
        let closed: [(&str, Option<f64>); 19] = [
            ("p_prime", Some(pp)),
            ("para_gas", Some(p)),
            ("ortho_gas", Some(1.0 - p)),
            ("ratio_gas", (p > 0.0).then(|| (1.0 - p) / p)),
            ("para_liq", Some((1.0 + 3.0 * pp) / 4.0)),
            ("ortho_liq", Some(3.0 * (1.0 - pp) / 4.0)),
            (
                "ratio_liq",
                (pp > -1.0 / 3.0).then(|| 3.0 * (1.0 - pp) / (1.0 + 3.0 * pp)),
            ),
            ("negativity_liq", Some(((3.0 * pp - 1.0) / 4.0).max(0.0))),
            (
                "entangled",
                Some(if pp > 1.0 / 3.0 + 1e-9 { 1.0 } else { 0.0 }),
            ),
            ("purity_gas", Some(p * p + (1.0 - p) * (1.0 - p))),
            ("purity_liq", Some((1.0 + 3.0 * pp * pp) / 4.0)),
            ("entropy_gas_bits", Some(entropy)),
            ("sx_gas", Some(2.0 * SQRT_2 * (1.0 - p) / 3.0)),
            ("sy_gas", Some(0.0)),
            ("sz_gas", Some(0.0)),
            ("sx_liq", Some(0.0)),
            ("sy_liq", Some(0.0)),
            ("sz_liq", Some(0.0)),
            ("mc_trace_dist", None),
        ];
        for (name, value) in closed {
            let tok = get(name);
            match value {
                None if name == "mc_trace_dist" => {
                    ensure(tok.is_empty(), || format!("{name} = {tok:?}"))?
                }
                None => ensure(tok == "inf", || {
                    format!("p = {p}: {name} = {tok}, expected inf")
                })?,
                Some(v) => {
                    let x: f64 = tok
                        .parse()
                        .map_err(|_| format!("{name}: bad token {tok}"))?;
                    ensure((x - v).abs() <= 1e-11 * v.abs().max(1.0), || {
                        format!("p = {p}: {name} = {tok}, closed form {v}")
                    })?;
                }
            }
            checked += 1;
        }
    }
    Ok(format!(
        "two runs byte-identical to golden; {checked} values match closed forms"
    ))
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("AC-01 gas pure state para/ortho", ac01_gas_para_ortho),
        (
            "AC-02 singlet collective invariance",
            ac02_singlet_collective_invariance,
        ),
        (
            "AC-03 Werner collective invariance",
            ac03_werner_collective_invariance,
        ),
        ("AC-04 NMR silence of Werner states", ac04_nmr_silence),
        (
            "AC-05 gas->liquid contraction",
            ac05_gas_to_liquid_contraction,
        ),
        ("AC-06 superselection consistency", ac06_superselection),
        (
            "AC-07 depolarization endpoint",
            ac07_depolarization_endpoint,
        ),
        ("AC-08 entanglement threshold", ac08_entanglement_threshold),
        (
            "AC-09 freed molecule is mixed",
            ac09_freed_molecule_is_mixed,
        ),
        (
            "AC-10 purification round trip",
            ac10_purification_round_trip,
        ),
        ("AC-11 CPTP verification", ac11_cptp_verification),
        ("AC-12 CLI determinism", ac12_cli_determinism),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  {name}: {detail}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
