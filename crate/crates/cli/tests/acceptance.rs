//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits nonzero
//! if any criterion fails. All checks are exact (tolerance 0); each criterion
//! also has a wall-clock budget.

use std::collections::BTreeMap;
use std::process::Command as Proc;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use thickgen::complex::random::{random_chain_map, random_complex, RandomParams};
use thickgen::complex::koszul_on;
use thickgen::ring::{Monomial, MultiPoly};
use thickgen::spectrum::NilpotenceOutcome;
use thickgen::{
    ann_total_homology, homology, is_connected_spec, level_lower_bound, nilpotence_lemma_check,
    principal_power_witness, smith_normal_form, thick_member, validate_witness, Field, FreeComplex, Ideal,
    LevelCertificate, Matrix, MonomialOrder, Ring, RingElem, UniPoly,
};
use thickgen_cli::{run_script, Options};

struct Outcome {
    ok: bool,
    detail: String,
}

fn summary<T: std::fmt::Debug>(failures: &[T]) -> String {
    match failures.first() {
        None => "0 failures".into(),
        Some(f) => format!("{} failures, first {f:?}", failures.len()),
    }
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

// ---------- small independent oracles ----------

fn gcd_i64(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn prime_power(m: u64) -> bool {
    if m < 2 {
        return false;
    }
    let mut p = 2;
    while p * p <= m && !m.is_multiple_of(p) {
        p += 1;
    }
    let p = if p * p > m { m } else { p };
    let mut r = m;
    while r.is_multiple_of(p) {
        r /= p;
    }
    r == 1
}

fn big(e: &RingElem) -> BigInt {
    e.ring().lift(e).as_bigint().cloned().expect("integer entry")
}

fn int_rows(m: &Matrix) -> Vec<Vec<BigInt>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(big).collect()).collect()
}

fn int_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>], inner: usize, cols: usize) -> Vec<Vec<BigInt>> {
    a.iter()
        .map(|row| (0..cols).map(|j| (0..inner).map(|k| &row[k] * &b[k][j]).sum()).collect())
        .collect()
}

/// Fraction-free Gaussian elimination.
fn bareiss_det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Polynomials in x, y over ℚ as exponent pairs.
type P = BTreeMap<(u32, u32), BigRational>;

fn grevlex_key(m: &(u32, u32)) -> (u32, u32) {
    (m.0 + m.1, m.0)
}

fn lead(p: &P) -> Option<((u32, u32), BigRational)> {
    p.iter().max_by_key(|(m, _)| grevlex_key(m)).map(|(m, c)| (*m, c.clone()))
}

fn add_scaled(p: &mut P, q: &P, c: &BigRational, shift: (u32, u32)) {
    for (m, d) in q {
        let key = (m.0 + shift.0, m.1 + shift.1);
        let v = p.remove(&key).unwrap_or_else(BigRational::zero) + c * d;
        if !v.is_zero() {
            p.insert(key, v);
        }
    }
}

fn divides(a: (u32, u32), b: (u32, u32)) -> bool {
    a.0 <= b.0 && a.1 <= b.1
}

fn remainder(f: &P, basis: &[P]) -> P {
    let mut p = f.clone();
    let mut r = P::new();
    while let Some((m, c)) = lead(&p) {
        match basis.iter().find(|g| divides(lead(g).unwrap().0, m)) {
            Some(g) => {
                let (gm, gc) = lead(g).unwrap();
                add_scaled(&mut p, g, &(-(c / gc)), (m.0 - gm.0, m.1 - gm.1));
            }
            None => {
                p.remove(&m);
                r.insert(m, c);
            }
        }
    }
    r
}

fn s_poly(f: &P, g: &P) -> P {
    let ((fm, fc), (gm, gc)) = (lead(f).unwrap(), lead(g).unwrap());
    let l = (fm.0.max(gm.0), fm.1.max(gm.1));
    let mut s = P::new();
    add_scaled(&mut s, f, &(BigRational::one() / fc), (l.0 - fm.0, l.1 - fm.1));
    add_scaled(&mut s, g, &(-BigRational::one() / gc), (l.0 - gm.0, l.1 - gm.1));
    s
}

fn monomials_up_to(d: u32) -> Vec<(u32, u32)> {
    (0..=d).flat_map(|t| (0..=t).map(move |a| (a, t - a))).collect()
}

/// Is `f = Σ hᵢ gᵢ` solvable with every `deg hᵢ ≤ bound`? Exact rational elimination.
fn member_by_linear_algebra(f: &P, gens: &[P], bound: u32) -> bool {
    let hmons = monomials_up_to(bound);
    let top = gens.iter().flat_map(|g| g.keys().map(|m| m.0 + m.1)).max().unwrap_or(0) + bound;
    let top = top.max(f.keys().map(|m| m.0 + m.1).max().unwrap_or(0));
    let rows_of: BTreeMap<(u32, u32), usize> = monomials_up_to(top).into_iter().enumerate().map(|(i, m)| (m, i)).collect();
    let ncols = gens.len() * hmons.len();
    let mut a = vec![vec![BigRational::zero(); ncols + 1]; rows_of.len()];
    for (gi, g) in gens.iter().enumerate() {
        for (hi, h) in hmons.iter().enumerate() {
            for (m, c) in g {
                a[rows_of[&(m.0 + h.0, m.1 + h.1)]][gi * hmons.len() + hi] = c.clone();
            }
        }
    }
    for (m, c) in f {
        a[rows_of[m]][ncols] = c.clone();
    }
    let mut r = 0;
    for col in 0..ncols {
        let Some(piv) = (r..a.len()).find(|&i| !a[i][col].is_zero()) else { continue };
        a.swap(r, piv);
        let inv = BigRational::one() / &a[r][col];
        for j in col..=ncols {
            a[r][j] = &a[r][j] * &inv;
        }
        for i in 0..a.len() {
            if i != r && !a[i][col].is_zero() {
                let k = a[i][col].clone();
                for j in col..=ncols {
                    let t = &k * &a[r][j];
                    a[i][j] -= t;
                }
            }
        }
        r += 1;
    }
    a[r..].iter().all(|row| row[ncols].is_zero())
}

fn to_core(r: &Ring, p: &P) -> RingElem {
    let ctx = r.poly_ctx().unwrap();
    let terms = p.iter().map(|(m, c)| (Monomial(vec![m.0, m.1]), c.clone())).collect();
    r.from_multipoly(MultiPoly::from_terms(&ctx, terms)).unwrap()
}

fn from_core(p: &MultiPoly) -> P {
    p.terms().iter().map(|(m, c)| ((m.0[0], m.0[1]), c.clone())).collect()
}

fn random_p(rng: &mut ChaCha8Rng, max_deg: u32, max_terms: usize) -> P {
    let mut p = P::new();
    for _ in 0..rng.gen_range(1..=max_terms) {
        let t = rng.gen_range(0..=max_deg);
        let a = rng.gen_range(0..=t);
        let c = rng.gen_range(-5i64..=5);
        if c != 0 {
            add_scaled(&mut p, &P::from([((a, t - a), BigRational::one())]), &BigRational::from_integer(c.into()), (0, 0));
        }
    }
    if p.is_empty() {
        p.insert((1, 0), BigRational::one());
    }
    p
}

fn mul_p(f: &P, g: &P) -> P {
    let mut out = P::new();
    for (m, c) in f {
        add_scaled(&mut out, g, c, *m);
    }
    out
}

/// Polynomials over F_p, low degree first, trimmed.
fn fp_trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn fp_inv(a: u64, p: u64) -> u64 {
    let mut r = 1;
    for _ in 0..p - 2 {
        r = r * a % p;
    }
    r
}

fn fp_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = fp_trim(a.to_vec());
    let b = fp_trim(b.to_vec());
    let inv = fp_inv(*b.last().unwrap(), p);
    while a.len() >= b.len() {
        let shift = a.len() - b.len();
        let c = a.last().unwrap() * inv % p;
        for (i, bc) in b.iter().enumerate() {
            a[i + shift] = (a[i + shift] + p - c * bc % p) % p;
        }
        a = fp_trim(a);
    }
    a
}

fn fp_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let (mut a, mut b) = (fp_trim(a.to_vec()), fp_trim(b.to_vec()));
    while !b.is_empty() {
        let r = fp_rem(&a, &b, p);
        a = b;
        b = r;
    }
    if let Some(&lc) = a.last() {
        let inv = fp_inv(lc, p);
        a = a.iter().map(|c| c * inv % p).collect();
    }
    a
}

fn fp_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    fp_trim(out)
}

// ---------- criteria ----------

/// Divisibility of principal ideals over ℤ or ℤ/m: `(a) ⊆ (b)` iff `gcd(b, m) | a`.
fn principal_in(a: &BigInt, b: &BigInt, m: &BigInt) -> bool {
    let b = num_integer::Integer::gcd(b, m);
    if b.is_zero() {
        a.is_zero()
    } else {
        (a % b).is_zero()
    }
}

fn c1_annihilator_lemma() -> Outcome {
    let params = RandomParams { lo: -2, len: 4, max_rank: 4, bound: 4, sparsity: 0.3 };
    let mut checks = 0;
    let mut failures = Vec::new();
    for (ring, m) in [(Ring::integers(), BigInt::zero()), (Ring::int_mod(12).unwrap(), BigInt::from(12))] {
        for seed in 0..200u64 {
            let x = random_complex(&ring, 1000 + seed, &params).unwrap();
            let y = random_complex(&ring, 5000 + seed, &params).unwrap();
            let f = random_chain_map(&x, &y, seed, &params).unwrap();
            let c = f.cone().unwrap();
            // the triangle's maps must be chain maps
            f.cone_inclusion().unwrap();
            f.cone_projection().unwrap();
            let gen = |z: &FreeComplex| big(ann_total_homology(z).unwrap().generator().unwrap());
            let (ax, ay, ac) = (gen(&x), gen(&y), gen(&c));
            // X → Y → C → ΣX and its two rotations
            for (a, b, target, label) in [(&ax, &ac, &ay, "ann X·ann C ⊆ ann Y"), (&ay, &ax, &ac, "ann Y·ann ΣX ⊆ ann C"), (&ac, &ay, &ax, "ann C·ann ΣY ⊆ ann ΣX")] {
                checks += 1;
                if !principal_in(&(a * b), target, &m) {
                    failures.push(format!("{} seed {seed}: {label}", ring));
                }
            }
        }
    }
    outcome(failures.is_empty(), format!("400 maps over Z and Zmod 12, {checks} containments, {}", summary(&failures)))
}

fn c2_koszul_invariants() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut failures = Vec::new();
    for t in 0..50 {
        let (ring, gens, expected): (Ring, Vec<RingElem>, Option<RingElem>) = match t % 3 {
            0 => {
                let z = Ring::integers();
                let c = rng.gen_range(1i64..=10);
                let gs: Vec<i64> = (0..rng.gen_range(1..=3)).map(|_| c * rng.gen_range(-12i64..=12)).collect();
                let g = gs.iter().fold(0, |acc, &v| gcd_i64(acc, v));
                let es = gs.iter().map(|&v| z.from_int(v)).collect();
                (z.clone(), es, if g == 1 { None } else { Some(z.from_int(g)) })
            }
            1 => {
                let m = [4i64, 8, 9, 12, 18, 27, 30, 36][rng.gen_range(0..8)];
                let r = Ring::int_mod(m).unwrap();
                let gs: Vec<i64> = (0..rng.gen_range(1..=3)).map(|_| rng.gen_range(0..m)).collect();
                let g = gs.iter().fold(m, |acc, &v| gcd_i64(acc, v));
                let es = gs.iter().map(|&v| r.from_int(v)).collect();
                (r.clone(), es, if g == 1 { None } else { Some(r.from_int(g)) })
            }
            _ => {
                let p = [2u64, 3, 5, 7][rng.gen_range(0..4)];
                let field = Field::Prime(p);
                let r = Ring::unipoly(field.clone(), "x").unwrap();
                let common: Vec<u64> = (0..rng.gen_range(1..=3)).map(|_| rng.gen_range(0..p)).chain([1]).collect();
                let gs: Vec<Vec<u64>> = (0..rng.gen_range(1..=3))
                    .map(|_| fp_mul(&common, &(0..rng.gen_range(1..=3)).map(|_| rng.gen_range(0..p)).collect::<Vec<_>>(), p))
                    .collect();
                let g = gs.iter().fold(Vec::new(), |acc, v| fp_gcd(&acc, v, p));
                let elem = |v: &[u64]| {
                    let cs: Vec<i64> = v.iter().map(|&c| c as i64).collect();
                    r.from_unipoly(UniPoly::from_i64s(&field, &cs)).unwrap()
                };
                let es = gs.iter().map(|v| elem(v)).collect();
                (r.clone(), es, if g == vec![1] { None } else { Some(elem(&g)) })
            }
        };
        let k = koszul_on(&ring, &gens).unwrap();
        let h0 = homology(&k, 0).unwrap();
        // R/(g): zero for a unit, free of rank one for g = 0, else one invariant factor g (in the cover)
        let ok_h0 = match &expected {
            None => h0.is_zero(),
            Some(g) if Ideal::principal(g).unwrap().is_zero() => h0.free_rank() == 1 && h0.invariant_factors().is_empty(),
            Some(g) => h0.free_rank() == 0 && h0.invariant_factors() == [ring.lift(g).normalized()],
        };
        let ann = ann_total_homology(&k).unwrap();
        let ideal = Ideal::new(&ring, gens.clone()).unwrap();
        let expected_ann = Ideal::principal(&expected.clone().unwrap_or_else(|| ring.one())).unwrap();
        let ok_ann = ann.contains(&ideal).unwrap() && ann.equals(&expected_ann).unwrap();
        if !(ok_h0 && ok_ann) {
            failures.push(format!("{ring} gens {gens:?}: H0 = {h0}, ann = {ann}"));
        }
    }
    outcome(failures.is_empty(), format!("50 ideals over Z, Z/m, F_p[x]; {}", summary(&failures)))
}

fn c3_tight_levels() -> Outcome {
    let z = Ring::integers();
    let qx = Ring::unipoly(Field::Rational, "x").unwrap();
    let mut failures = Vec::new();
    for x in [z.from_int(2), qx.parse_elem("x").unwrap()] {
        let g = FreeComplex::two_term(&x);
        for n in 1..=8usize {
            let target = FreeComplex::two_term(&x.pow(n as u64));
            let lower = level_lower_bound(&target, &g).unwrap();
            let upper = validate_witness(&principal_power_witness(&x, n).unwrap(), &target, &g);
            let ok = matches!(lower, LevelCertificate::LowerBound { level, .. } if level == n) && upper.as_ref().ok() == Some(&n);
            if !ok {
                failures.push(format!("{x}^{n}: lower {lower}, upper {upper:?}"));
            }
        }
    }
    outcome(failures.is_empty(), format!("n = 1..8 over Z with 2 and Q[x] with x; {}", summary(&failures)))
}

const OBSTRUCT_SCRIPT: &str = "ring R = poly Q [x,y] grevlex\nideal I over R = (x, y)\nobstruct R I --max 6\n";

fn blocks(out: &str) -> Vec<BTreeMap<String, String>> {
    out.split("\n\n")
        .map(|b| b.lines().filter_map(|l| l.split_once(": ")).map(|(k, v)| (k.to_string(), v.to_string())).collect())
        .collect()
}

fn c4_obstruction() -> Outcome {
    let out = match run_script(OBSTRUCT_SCRIPT, &[], &Options { machine: true, jobs: 1 }) {
        Ok(o) => o,
        Err(e) => return outcome(false, format!("obstruct failed: {e}")),
    };
    let r = Ring::multipoly(Field::Rational, &["x", "y"], MonomialOrder::Grevlex).unwrap();
    let bs = blocks(&out);
    let mut failures = Vec::new();
    for n in 2..=6usize {
        let Some(b) = bs.iter().find(|b| b.get("n").map(String::as_str) == Some(&n.to_string())) else {
            failures.push(format!("no block for n = {n}"));
            continue;
        };
        let level_ok = b["kind"] == "lower-bound" && b["level"] == n.to_string() && b["cones"] == (n - 1).to_string();
        // (x, y)^k is spanned by the monomials of degree ≥ k
        let evidence = from_core(r.parse_elem(&b["evidence"]).unwrap().as_multipoly().unwrap());
        let min_deg = evidence.keys().map(|m| m.0 + m.1).min();
        let witness_ok = min_deg.is_some_and(|d| d as usize >= n - 1) && evidence.keys().any(|m| ((m.0 + m.1) as usize) < n);
        if !(level_ok && witness_ok) {
            failures.push(format!("n = {n}: {b:?}"));
        }
    }
    let verdict = bs.iter().any(|b| b.get("verdict").map(String::as_str) == Some("not-strongly-generated"));
    if !verdict {
        failures.push("missing verdict not-strongly-generated".into());
    }
    outcome(failures.is_empty(), format!("Q[x,y], I = (x, y), maxN 6: LowerBound(n) for n = 2..6 with evidence in I^(n-1) \\ I^n; {}", summary(&failures)))
}

fn c5_nilpotence_sweep() -> Outcome {
    let mut failures = Vec::new();
    let (mut nilpotent, mut controls, mut nonzero_controls) = (0, 0, 0);
    for m in 2..=64i64 {
        let r = Ring::int_mod(m).unwrap();
        let pp = prime_power(m as u64);
        let mut found_nonzero = false;
        for a in 0..m {
            if gcd_i64(a, m) == 1 {
                continue;
            }
            // independent stabilization index and power: (aⁿ) = (gcd(aⁿ, m))
            let mut n = 1;
            let mut pw = a.rem_euclid(m);
            while gcd_i64(pw, m) != gcd_i64(pw * a % m, m) {
                pw = pw * a % m;
                n += 1;
            }
            let power_zero = pw == 0;
            let rep = nilpotence_lemma_check(&r, &Ideal::principal(&r.from_int(a)).unwrap(), 64);
            match (pp, rep.map(|r| r.outcome)) {
                (true, Ok(NilpotenceOutcome::Nilpotent { n: k })) if k == n && power_zero => nilpotent += 1,
                (false, Ok(NilpotenceOutcome::NegativeControl { n: k, power_nonzero, .. })) if k == n && power_nonzero == !power_zero => {
                    controls += 1;
                    if power_nonzero {
                        found_nonzero = true;
                        nonzero_controls += 1;
                    }
                }
                (_, other) => failures.push(format!("Z/{m}, ({a}): {other:?}")),
            }
        }
        if !pp && !found_nonzero {
            failures.push(format!("Z/{m}: no non-nilpotent stabilizing ideal"));
        }
    }
    outcome(
        failures.is_empty(),
        format!("m <= 64: {nilpotent} nilpotent chains, {controls} negative controls ({nonzero_controls} non-nilpotent); {}", summary(&failures)),
    )
}

fn c6_connectedness() -> Outcome {
    let mut failures = Vec::new();
    for m in 2..=1000u64 {
        let c = is_connected_spec(&Ring::int_mod(m).unwrap()).unwrap();
        if c.is_connected() != prime_power(m) {
            failures.push(m);
        }
    }
    outcome(failures.is_empty(), format!("m = 2..1000, {}", summary(&failures)))
}

fn c7_snf() -> Outcome {
    let z = Ring::integers();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut failures = Vec::new();
    for t in 0..500 {
        let (rows, cols) = (rng.gen_range(1..=6usize), rng.gen_range(1..=6usize));
        let entries: Vec<Vec<i64>> = (0..rows).map(|_| (0..cols).map(|_| rng.gen_range(-50..=50)).collect()).collect();
        let refs: Vec<&[i64]> = entries.iter().map(|r| r.as_slice()).collect();
        let a = Matrix::from_i64(&z, &refs);
        let s = smith_normal_form(&a).unwrap();
        let (u, d, a_rows, v) = (int_rows(&s.u), int_rows(&s.d), int_rows(&a), int_rows(&s.v));
        let uav = int_mul(&int_mul(&u, &a_rows, rows, cols), &v, cols, cols);
        let mut ok = uav == d;
        ok &= bareiss_det(&u).abs().is_one() && bareiss_det(&v).abs().is_one();
        let diag: Vec<BigInt> = (0..rows.min(cols)).map(|i| d[i][i].clone()).collect();
        for i in 0..rows {
            for j in 0..cols {
                ok &= i == j || d[i][j].is_zero();
            }
        }
        ok &= diag.iter().all(|x| !x.is_negative());
        for w in diag.windows(2) {
            ok &= if w[0].is_zero() { w[1].is_zero() } else { (&w[1] % &w[0]).is_zero() };
        }
        if rows == cols {
            ok &= bareiss_det(&a_rows).abs() == diag.iter().product::<BigInt>();
        }
        if !ok {
            failures.push(t);
        }
    }
    outcome(failures.is_empty(), format!("500 matrices up to 6x6, entries in [-50, 50]; UAV = D, |det U| = |det V| = 1, chain, |det A| = prod D; {}", summary(&failures)))
}

const ORACLE_DEGREE: u32 = 7;

fn c8_groebner() -> Outcome {
    let r = Ring::multipoly(Field::Rational, &["x", "y"], MonomialOrder::Grevlex).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut failures = Vec::new();
    let (mut members, mut spairs, mut units) = (0, 0, 0);
    for t in 0..50 {
        // mostly two generators (generically a finite set of points); some share a linear factor
        let common = if t % 4 == 0 { random_p(&mut rng, 1, 2) } else { P::from([((0, 0), BigRational::one())]) };
        let deg = 3 - lead(&common).unwrap().0 .0 - lead(&common).unwrap().0 .1;
        let count = if t % 5 == 4 { 3 } else { 2 };
        let gens: Vec<P> = (0..count).map(|_| mul_p(&common, &random_p(&mut rng, deg, 3))).collect();
        let ideal = Ideal::new(&r, gens.iter().map(|g| to_core(&r, g)).collect()).unwrap();
        let gb: Vec<P> = ideal.groebner_basis().unwrap().iter().map(from_core).collect();
        units += (gb.len() == 1 && lead(&gb[0]).unwrap().0 == (0, 0)) as usize;
        let mut ok = gens.iter().all(|g| remainder(g, &gb).is_empty());
        for (i, f) in gb.iter().enumerate() {
            ok &= lead(f).unwrap().1.is_one();
            for (j, g) in gb.iter().enumerate() {
                if i < j {
                    spairs += 1;
                    ok &= remainder(&s_poly(f, g), &gb).is_empty();
                }
                if i != j {
                    ok &= f.keys().all(|m| !divides(lead(g).unwrap().0, *m));
                }
            }
        }
        // half the queries are built inside the ideal
        let query = if t % 2 == 0 {
            gens.iter().fold(P::new(), |mut acc, g| {
                let h = random_p(&mut rng, 2, 3);
                add_scaled(&mut acc, &mul_p(&h, g), &BigRational::one(), (0, 0));
                acc
            })
        } else {
            random_p(&mut rng, 3, 4)
        };
        let engine = ideal.member(&to_core(&r, &query)).unwrap();
        let oracle = member_by_linear_algebra(&query, &gens, ORACLE_DEGREE);
        members += engine as usize;
        if !ok || engine != oracle {
            failures.push(format!("ideal {t}: basis ok {ok}, engine {engine}, oracle {oracle}"));
        }
    }
    outcome(
        failures.is_empty(),
        format!("50 ideals in Q[x,y] ({units} unit ideals), {spairs} S-pairs, 50 queries ({members} members) against degree-{ORACLE_DEGREE} linear algebra; {}", summary(&failures)),
    )
}

fn c9_thick_table() -> Outcome {
    let z = Ring::integers();
    let k = |n: i64| FreeComplex::two_term(&z.from_int(n));
    let primes = |n: i64| -> Vec<BigInt> {
        let ps = thickgen::homology::supph(&k(n)).unwrap();
        ps.primes().unwrap().iter().map(big).collect()
    };
    let hand: [(i64, &[i64]); 3] = [(2, &[2]), (4, &[2]), (6, &[2, 3])];
    let mut failures = Vec::new();
    for (n, ps) in hand {
        if primes(n) != ps.iter().map(|&p| BigInt::from(p)).collect::<Vec<_>>() {
            failures.push(format!("supph koszul(({n})) = {:?}", primes(n)));
        }
    }
    for (x, g, expected) in [(2, 6, true), (6, 2, false), (4, 2, true), (2, 4, true)] {
        if thick_member(&k(x), &k(g)).unwrap().member != expected {
            failures.push(format!("koszul(({x})) in thick(koszul(({g}))) should be {expected}"));
        }
    }
    outcome(failures.is_empty(), format!("4 memberships, 3 prime lists over Z; {}", summary(&failures)))
}

fn c10_determinism() -> Outcome {
    let dir = std::env::temp_dir().join(format!("thickgen-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("obstruct.tg");
    std::fs::write(&path, OBSTRUCT_SCRIPT).unwrap();
    let run = |jobs: &str| Proc::new(env!("CARGO_BIN_EXE_thickgen")).args(["--machine", "--jobs", jobs]).arg(&path).output().unwrap();
    let (a, b, c) = (run("1"), run("1"), run("4"));
    let ok = a.status.success() && b.status.success() && c.status.success() && !a.stdout.is_empty() && a.stdout == b.stdout && a.stdout == c.stdout;
    outcome(ok, format!("two runs of the obstruct script ({} bytes) identical, and identical with --jobs 4", a.stdout.len()))
}

fn main() {
    let criteria: [(&str, u64, fn() -> Outcome); 10] = [
        ("annihilator lemma on triangles", 30, c1_annihilator_lemma),
        ("koszul invariants", 30, c2_koszul_invariants),
        ("tight level family", 30, c3_tight_levels),
        ("strong generation obstruction", 10, c4_obstruction),
        ("nilpotence sweep", 30, c5_nilpotence_sweep),
        ("connectedness iff prime power", 10, c6_connectedness),
        ("smith normal form kernel", 30, c7_snf),
        ("groebner kernel", 60, c8_groebner),
        ("thick membership table", 5, c9_thick_table),
        ("determinism", 30, c10_determinism),
    ];
    let mut passed = 0;
    for (i, (name, budget, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = run();
        let elapsed = start.elapsed();
        let ok = out.ok && elapsed < Duration::from_secs(*budget);
        passed += ok as usize;
        println!(
            "{} {:>2} {name}: {} [{:.2}s of {budget}s]",
            if ok { "PASS" } else { "FAIL" },
            i + 1,
            out.detail,
            elapsed.as_secs_f64()
        );
    }
    println!("{passed}/{} criteria passed", criteria.len());
    if passed != criteria.len() {
        std::process::exit(1);
    }
}
