//! One PASS/FAIL line per acceptance criterion; exits nonzero on any failure.

use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::process::{Command, ExitCode};
use std::time::Instant;

use lpcoh::differentials::{delta_ce, delta_hoch, delta_lie, delta_sigma};
use lpcoh::engine::{
    ce_cohomology, cell_dim, collapse_check, derivation_module, hochschild_cohomology, les_report, lp_cohomology_dims,
    lp_total_complex, q_ext, EngineConfig, EngineError,
};
use lpcoh::library::{example, m2_sl2_pair, EXAMPLE_NAMES};
use lpcoh::linalg::rank;
use lpcoh::lp_module::{
    functor_f, functor_f_hom, functor_g, functor_g_hom, validate_hom, validate_ual_hom, Bimodule, LPModule, LieModule,
};
use lpcoh::random::{random_invertible, random_matrix, random_module, random_pair};
use lpcoh::structures::{AssocAlgebra, LeibnizPair, LieAlgebra};
use lpcoh::{Field, Matrix, QModule, Rational};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Q = Rational;
type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ex(name: &str) -> QModule {
    example(name).expect("bundled example")
}

fn cfg() -> EngineConfig {
    EngineConfig::default()
}

fn expect<T: PartialEq + std::fmt::Debug>(what: &str, found: T, wanted: T) -> Result<(), String> {
    if found == wanted {
        Ok(())
    } else {
        Err(format!("{what}: got {found:?}, expected {wanted:?}"))
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn m2_sl2_vanishes() -> Check {
    let start = Instant::now();
    let m = ex("m2_sl2");
    expect("H_LP", lp_cohomology_dims(&m, 3, &cfg()).map_err(err)?, vec![0; 4])?;
    expect("Ext", q_ext(&m, 3, &cfg()).map_err(err)?, vec![0; 4])?;
    expect("HL(sl2, ad)", ce_cohomology(m.pair().lie(), m.p(), 3), vec![0; 4])?;
    let secs = start.elapsed().as_secs_f64();
    if secs >= 60.0 {
        return Err(format!("took {secs:.1} s"));
    }
    Ok(format!("H_LP, Ext, HL all zero in degrees 0..3 ({secs:.1} s)"))
}

fn derivations_are_sl2() -> Check {
    let m = LPModule::<Q>::adjoint(m2_sl2_pair()).map_err(err)?;
    let ker = 16 - rank(&delta_hoch(&m, 1, 0).matrix);
    expect("dim ker", ker, 3)?;
    let (d, basis) = derivation_module(&m);
    expect("derivation basis", basis.dim(), 3)?;
    let ad = LieModule::adjoint(m.pair().lie());
    for x in 0..3 {
        for y in 0..3 {
            let tr2 = |r: &LieModule<Q>| r.action[x].mul(&r.action[y]).trace();
            expect("tr(xy)", tr2(&d), tr2(&ad))?;
            for z in 0..3 {
                let tr3 = |r: &LieModule<Q>| r.action[x].mul(&r.action[y]).mul(&r.action[z]).trace();
                expect("tr(xyz)", tr3(&d), tr3(&ad))?;
            }
        }
    }
    Ok("dim Der(M2) = 3, trace forms match ad(sl2)".into())
}

fn hochschild_oracle() -> Check {
    let big = EngineConfig { max_degree: 8, ..cfg() };
    let m2 = AssocAlgebra::<Q>::matrix_algebra(2);
    expect(
        "HH(M2)",
        hochschild_cohomology(&m2, &Bimodule::regular(&m2), 3, &big).map_err(err)?,
        vec![1, 0, 0, 0],
    )?;
    let dual = AssocAlgebra::<Q>::truncated_polynomials(2);
    let hh = hochschild_cohomology(&dual, &Bimodule::regular(&dual), 3, &big).map_err(err)?;
    if hh[2] == 0 {
        return Err("HH^2 of dual numbers vanished".into());
    }
    match collapse_check(&ex("dual_numbers_poisson"), 2, &cfg()) {
        Err(EngineError::NotCollapsed { degree: 2, .. }) => {}
        other => return Err(format!("collapse_check gave {other:?}")),
    }
    Ok(format!("HH(M2) = 1,0,0,0; HH(Q[t]/t^2) = {hh:?}; NotCollapsed"))
}

/// Assembles the total differential from the four families of maps, with
/// sign `(-1)^i` on the horizontal map out of row `i`, checking every square
/// on the way.
fn total_from_cells(m: &QModule, top: usize) -> Result<Vec<Matrix<Q>>, String> {
    let l = m.pair().lie();
    let mut h = HashMap::new();
    let mut v = HashMap::new();
    for n in 0..top {
        for i in 0..=n {
            let j = n - i;
            h.insert(
                (i, j),
                if i == 0 {
                    delta_ce(l, m.p(), j).matrix
                } else {
                    delta_lie(m, i, j).matrix
                },
            );
            v.insert(
                (i, j),
                if i == 0 {
                    delta_sigma(m, j).matrix
                } else {
                    delta_hoch(m, i, j).matrix
                },
            );
        }
    }
    for n in 0..top.saturating_sub(1) {
        for i in 0..=n {
            let j = n - i;
            if !h[&(i, j + 1)].mul(&h[&(i, j)]).is_zero() || !v[&(i + 1, j)].mul(&v[&(i, j)]).is_zero() {
                return Err(format!("a map squares to nonzero at cell ({i}, {j})"));
            }
            if v[&(i, j + 1)].mul(&h[&(i, j)]) != h[&(i + 1, j)].mul(&v[&(i, j)]) {
                return Err(format!("square at cell ({i}, {j}) does not commute"));
            }
        }
    }
    let offsets = |n: usize| -> Vec<usize> {
        let mut acc = vec![0];
        for i in 0..=n {
            acc.push(acc[i] + cell_dim(m, i, n - i));
        }
        acc
    };
    let mut maps = Vec::new();
    for n in 0..top {
        let (src, tgt) = (offsets(n), offsets(n + 1));
        let mut d = Matrix::zeros(tgt[n + 2], src[n + 1]);
        for i in 0..=n {
            let sign = Q::from_i64(if i % 2 == 1 { -1 } else { 1 });
            d.add_block(tgt[i], src[i], &h[&(i, n - i)], &sign);
            d.add_block(tgt[i + 1], src[i], &v[&(i, n - i)], &Q::one());
        }
        maps.push(d);
    }
    Ok(maps)
}

fn d_squared_suite() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0xd2);
    let roomy = EngineConfig {
        max_degree: 8,
        budget: 1 << 20,
    };
    let cases = 20;
    for case in 0..cases {
        let pair = random_pair::<Q, _>(&mut rng, 3);
        let m = random_module(&mut rng, &pair);
        let maps = total_from_cells(&m, 5).map_err(|e| format!("case {case}: {e}"))?;
        let tot = lp_total_complex(&m, 5, &roomy).map_err(|e| format!("case {case}: {e}"))?;
        for n in 0..=3 {
            if !maps[n + 1].mul(&maps[n]).is_zero() {
                return Err(format!("case {case}: independent D^2 != 0 in degree {n}"));
            }
            let (d0, d1) = (tot.d(n).ok_or("missing map")?, tot.d(n + 1).ok_or("missing map")?);
            if !d1.mul(d0).is_zero() {
                return Err(format!("case {case}: engine d^2 != 0 in degree {n}"));
            }
        }
    }
    Ok(format!(
        "{cases} random modules, d^2 = 0 for n <= 3, all squares commute"
    ))
}

fn les_everywhere() -> Check {
    for name in EXAMPLE_NAMES {
        let m = ex(name);
        let r = les_report(&m, 3, &cfg()).map_err(|e| format!("{name}: {e}"))?;
        expect(name, r.les.degrees.len(), 4)?;
        let lp = lp_cohomology_dims(&m, 3, &cfg()).map_err(err)?;
        let ce = ce_cohomology(m.pair().lie(), m.p(), 3);
        let ext = q_ext(&m, 2, &cfg()).map_err(err)?;
        for d in &r.les.degrees {
            let n = d.degree;
            expect(name, d.total_dim, lp[n])?;
            expect(name, d.quot_dim, ce[n])?;
            expect(name, d.sub_dim, if n == 0 { 0 } else { ext[n - 1] })?;
        }
    }
    Ok(format!(
        "exact through degree 3 on {} examples, dims match standalone runs",
        EXAMPLE_NAMES.len()
    ))
}

/// Dimension of `{f : A → A | f(ab) = a f(b) + f(a) b}`, solved directly
/// from the structure constants with unknowns `f[k][m]` at `k * d + m`.
fn derivation_dim_oracle(a: &AssocAlgebra<Q>) -> usize {
    let d = a.dim();
    let mut rows = Vec::new();
    for i in 0..d {
        for j in 0..d {
            for out in 0..d {
                let mut row = vec![Q::zero(); d * d];
                for k in 0..d {
                    row[k * d + out] = row[k * d + out].clone() + a.constant(i, j, k).clone();
                }
                for t in 0..d {
                    row[j * d + t] = row[j * d + t].clone() - a.constant(i, t, out).clone();
                    row[i * d + t] = row[i * d + t].clone() - a.constant(t, j, out).clone();
                }
                rows.push(row);
            }
        }
    }
    d * d - rank(&Matrix::from_rows(rows))
}

fn l_zero_reduction() -> Check {
    let big = EngineConfig { max_degree: 8, ..cfg() };
    let mut seen = Vec::new();
    for (label, a, known) in [
        ("M2", AssocAlgebra::<Q>::matrix_algebra(2), [0, 0]),
        ("Q[t]/t^2", AssocAlgebra::truncated_polynomials(2), [1, 1]),
    ] {
        let m = LPModule::algebra_without_p(LeibnizPair::without_lie(a.clone())).map_err(err)?;
        let lp = lp_cohomology_dims(&m, 3, &cfg()).map_err(err)?;
        let der = derivation_dim_oracle(&a);
        expect(label, lp[1], der)?;
        let hh = hochschild_cohomology(&a, &Bimodule::regular(&a), 3, &big).map_err(err)?;
        expect(label, &lp[2..], &hh[2..])?;
        expect(label, &lp[2..], &known[..])?;
        seen.push(format!("{label}: H^1 = {der}"));
    }
    Ok(seen.join(", ") + "; H^2, H^3 = HH")
}

fn ce_spot_checks() -> Check {
    let sl2 = LieAlgebra::<Q>::sl2();
    expect(
        "HL(sl2)",
        ce_cohomology(&sl2, &LieModule::trivial(1, 3), 3),
        vec![1, 0, 0, 1],
    )?;
    let ab = LieAlgebra::<Q>::abelian(2);
    expect(
        "HL(ab2)",
        ce_cohomology(&ab, &LieModule::trivial(1, 2), 2),
        vec![1, 2, 1],
    )?;
    Ok("HL(sl2, Q) = 1,0,0,1; HL(Q^2, Q) = 1,2,1".into())
}

fn functor_round_trip() -> Check {
    for name in EXAMPLE_NAMES {
        let m = ex(name);
        let back = functor_g(&functor_f(&m)).map_err(|e| format!("{name}: {e}"))?;
        if back != m {
            return Err(format!("{name}: G(F(m)) differs from m"));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0xf8);
    let (mut valid, mut invalid) = (0, 0);
    while valid < 12 || invalid < 12 {
        let pair = random_pair::<Q, _>(&mut rng, 3);
        let m = random_module(&mut rng, &pair);
        let (dm, dp) = (m.dim_m(), m.dim_p());
        let (s, p) = (random_invertible(&mut rng, dm), random_invertible(&mut rng, dp));
        let m1 = m.transport(&s, &p);
        let h = validate_hom(&m, &m1, s, p).map_err(|e| format!("transport rejected: {e}"))?;
        let uh = functor_f_hom(&h);
        let uh = validate_ual_hom(&functor_f(&m), &functor_f(&m1), uh.f, uh.g)
            .map_err(|e| format!("F lost a valid hom: {e}"))?;
        let back = functor_g_hom(&uh);
        validate_hom(&m, &m1, back.g.clone(), back.f.clone()).map_err(|e| format!("G lost a valid hom: {e}"))?;
        expect("G(F(h))", back, h)?;
        valid += 1;

        if dm + dp == 0 {
            continue;
        }
        let g = random_matrix(&mut rng, dm, dm, 2);
        let f = random_matrix(&mut rng, dp, dp, 2);
        let lp_ok = validate_hom(&m, &m1, g.clone(), f.clone()).is_ok();
        let ual_ok = validate_ual_hom(&functor_f(&m), &functor_f(&m1), f, g).is_ok();
        if lp_ok != ual_ok {
            return Err(format!("validity disagrees: LP {lp_ok}, U {ual_ok}"));
        }
        if !lp_ok {
            invalid += 1;
        }
    }
    Ok(format!(
        "{} examples round trip; {valid} valid and {invalid} invalid homs agree",
        EXAMPLE_NAMES.len()
    ))
}

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_lpcoh"));
    c.env_remove("LPCOH_BUDGET").env_remove("LPCOH_MAX_N");
    c
}

fn run(args: &[&str], path: Option<&Path>) -> Result<Vec<u8>, String> {
    let mut c = bin();
    c.args(args);
    if let Some(p) = path {
        c.arg(p);
    }
    let out = c.output().map_err(err)?;
    Ok(out.stdout)
}

fn determinism() -> Check {
    let dir: PathBuf = std::env::temp_dir().join(format!("lpcoh-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(err)?;
    let mut runs = 0;
    let mut compare = |args: &[&str], path: Option<&Path>| -> Result<(), String> {
        let (a, b) = (run(args, path)?, run(args, path)?);
        runs += 2;
        if a != b {
            return Err(format!("{args:?} {path:?} differs between runs"));
        }
        if a.is_empty() {
            return Err(format!("{args:?} {path:?} printed nothing"));
        }
        Ok(())
    };
    compare(&["examples", "list", "--json"], None)?;
    for name in EXAMPLE_NAMES {
        compare(&["examples", "emit", name], None)?;
        let path = dir.join(format!("{name}.json"));
        let status = bin()
            .args(["examples", "emit", name, "--out"])
            .arg(&path)
            .status()
            .map_err(err)?;
        if !status.success() {
            return Err(format!("emit {name} failed"));
        }
        compare(&["validate", "--json"], Some(&path))?;
        for which in ["lp", "ce", "hochschild", "qext"] {
            compare(&["cohom", which, "-N", "3", "--json"], Some(&path))?;
        }
        compare(&["cohom", "lp", "-N", "2", "--reps", "--json"], Some(&path))?;
        compare(&["les", "-N", "3", "--json"], Some(&path))?;
    }
    let _ = std::fs::remove_dir_all(&dir);
    Ok(format!("{runs} runs, byte-identical in pairs"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("m2/sl2 vanishing", m2_sl2_vanishes),
        ("derivations of M2", derivations_are_sl2),
        ("Hochschild oracle", hochschild_oracle),
        ("d^2 = 0 suite", d_squared_suite),
        ("long exact sequence", les_everywhere),
        ("L = 0 reduction", l_zero_reduction),
        ("Lie cohomology spot checks", ce_spot_checks),
        ("functor round trip", functor_round_trip),
        ("CLI determinism", determinism),
    ];
    let mut failed = 0;
    for (k, (label, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS criterion {}: {label}: {detail}", k + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {}: {label}: {detail}", k + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
