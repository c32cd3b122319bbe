use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use stallings::hn::{hn_profile, loop_family, shn_report, ClassicalBounds};
use stallings::lattice::{intersect, join, pullback};
use stallings::random::{random_complete_core, random_core, random_word, random_words};
use stallings::{LabeledCore, Word};

type Outcome = Result<String, String>;

fn core(gens: &str) -> LabeledCore {
    LabeledCore::from_words(2, &Word::parse_list(gens).unwrap()).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn profile_example() -> Outcome {
    let p = hn_profile(&core("ab")).map_err(|e| e.to_string())?;
    ensure(p.h == 2 && p.n == [1, 1], || format!("<ab>: H={} n={:?}", p.h, p.n))?;
    let q = hn_profile(&core("b")).map_err(|e| e.to_string())?;
    ensure(q.h == 1 && q.n == [1, 0], || format!("<b>: H={} n={:?}", q.h, q.n))?;
    Ok("<ab> H=2 n=(1,1); <b> H=1 n=(1,0)".into())
}

fn checker_count() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x2001);
    let count = 1000;
    for i in 0..count {
        let c = random_core(&mut rng, 2, 20);
        let p = hn_profile(&c).map_err(|e| e.to_string())?;
        ensure(p.checker_count() + 1 == c.rank(), || {
            format!("core {i}: {} checkers, rank {}\n{c}", p.checker_count(), c.rank())
        })?;
        ensure(p.interior.len() >= p.n[0] + p.n[1], || {
            format!("core {i}: interior {} < n1+n2 = {}", p.interior.len(), p.n[0] + p.n[1])
        })?;
        ensure(p.reconstructed_rank() == c.rank(), || format!("core {i}: rank mismatch"))?;
    }
    Ok(format!("{count} cores"))
}

fn rank_estimate() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x3001);
    let count = 200;
    let mut tight = 0;
    for i in 0..count {
        let c1 = random_core(&mut rng, 2, 12);
        let c2 = random_core(&mut rng, 2, 12);
        let r = shn_report(&c1, &c2).map_err(|e| format!("pair {i}: {e}\n{c1}{c2}"))?;
        ensure(r.lhs <= r.rhs(), || format!("pair {i}: lhs {} > rhs {}", r.lhs, r.rhs()))?;
        if r.lhs == r.rhs() {
            tight += 1;
        }
    }
    let a = core("a,bAB,bb");
    let r = shn_report(&a, &a).map_err(|e| e.to_string())?;
    ensure(r.lhs == 4 && r.rhs() == 4, || format!("self-intersection lhs={} rhs={}", r.lhs, r.rhs()))?;
    Ok(format!("{count} pairs, {tight} tight; <a,bAB,bb> self lhs=rhs=4"))
}

/// `(k, lhs, rhs1, rhs2, classical)` for one member of the family.
type Row = (i64, i64, i64, i64, ClassicalBounds);

fn comparison_table() -> Outcome {
    const FROZEN_LHS: [i64; 6] = [0, 1, 4, 9, 16, 25];
    let mut rows: Vec<Row> = Vec::new();
    for k in 1..=6usize {
        let c = loop_family(k);
        let r = shn_report(&c, &c).map_err(|e| e.to_string())?;
        ensure(r.lhs == FROZEN_LHS[k - 1], || format!("k={k}: lhs {}", r.lhs))?;
        ensure(r.rhs() <= r.classical.neumann, || format!("k={k}: theorem above Neumann"))?;
        ensure(r.classical == ClassicalBounds::new(k, k), || format!("k={k}: bounds"))?;
        rows.push((k as i64, r.lhs, r.rhs1, r.rhs2, r.classical));
    }
    let mut crossover = None;
    for w in rows.windows(2) {
        let (a, b) = (&w[0], &w[1]);
        ensure(b.1 >= a.1 && b.2 >= a.2 && b.3 >= a.3, || format!("k={}: not monotone", b.0))?;
        ensure(b.4.neumann >= a.4.neumann && b.4.burns >= a.4.burns, || format!("k={}: classical not monotone", b.0))?;
    }
    for (k, _, rhs1, rhs2, cl) in &rows {
        if crossover.is_none() && (*rhs1).min(*rhs2) < cl.burns {
            crossover = Some(*k);
        }
    }
    // error terms over the common product (k - 1)^2
    let eps = |v: i64, k: i64| v - (k - 1) * (k - 1);
    let second = |f: &dyn Fn(&Row) -> i64| -> Vec<i64> {
        rows.windows(3).map(|w| f(&w[2]) - 2 * f(&w[1]) + f(&w[0])).collect()
    };
    let burns_2nd = second(&|r| eps(r.4.burns, r.0));
    let df_2nd = second(&|r| eps(r.4.dicks_formanek, r.0));
    let neumann_2nd = second(&|r| eps(r.4.neumann, r.0));
    let theorem_2nd = second(&|r| eps(r.2.min(r.3), r.0));
    ensure(burns_2nd.iter().all(|&d| d == 2), || format!("burns eps second difference {burns_2nd:?}"))?;
    ensure(df_2nd.iter().all(|&d| d == 2), || format!("dicks-formanek eps second difference {df_2nd:?}"))?;
    ensure(neumann_2nd.iter().all(|&d| d == 2), || format!("neumann eps second difference {neumann_2nd:?}"))?;
    ensure(theorem_2nd.iter().all(|&d| d <= 0), || format!("theorem eps second difference {theorem_2nd:?}"))?;
    let tardos_tail = rows[2..].windows(3).all(|w| {
        eps(w[2].4.tardos, w[2].0) - 2 * eps(w[1].4.tardos, w[1].0) + eps(w[0].4.tardos, w[0].0) == 2
    });
    ensure(tardos_tail, || "tardos eps not quadratic for k >= 3".into())?;
    let crossover = crossover.ok_or("theorem never beats Burns")?;
    ensure(crossover == 3, || format!("crossover at k={crossover}"))?;
    Ok(format!("k=1..6 lhs=(k-1)^2, theorem < burns from k={crossover}"))
}

fn dictionary_laws() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5001);
    for i in 0..100 {
        let rank = rng.gen_range(2..=3);
        let n = rng.gen_range(1..=8);
        let c = random_complete_core(&mut rng, rank, n);
        let idx = c.index().finite().ok_or("complete core of infinite index")?;
        ensure(c.rank() == idx * (rank - 1) + 1, || format!("core {i}: rank {} index {idx}", c.rank()))?;
        ensure(c.schreier_basis().len() == c.rank(), || format!("core {i}: basis size"))?;
    }
    let mut checked = 0usize;
    let mut hits = [0usize; 3];
    while checked < 10_000 {
        let c1 = random_core(&mut rng, 2, 10);
        let c2 = random_core(&mut rng, 2, 10);
        let res = pullback(&c1, &c2).map_err(|e| e.to_string())?;
        let (n1, n2) = (c1.n_vertices(), c2.n_vertices());
        let cyclic: usize = res.non_tree().map(|comp| comp.vertices.len()).sum();
        ensure(res.n_vertices() <= n1 * n2 && cyclic <= n1 * n2, || "Howson bound".into())?;
        let meet = intersect(&c1, &c2).map_err(|e| e.to_string())?;
        let up = join(&c1, &c2).map_err(|e| e.to_string())?;
        ensure(meet.n_vertices() <= n1 * n2, || "intersection too large".into())?;
        let (b1, b2) = (c1.schreier_basis(), c2.schreier_basis());
        for _ in 0..100 {
            let w = match rng.gen_range(0..4) {
                0 => {
                    let len = rng.gen_range(0..=10);
                    random_word(&mut rng, 2, len)
                }
                1 => product(&mut rng, &b1, 3),
                2 => product(&mut rng, &b2, 3),
                _ => &product(&mut rng, &b1, 2) * &product(&mut rng, &b2, 2),
            };
            let (in1, in2) = (c1.contains(&w).unwrap(), c2.contains(&w).unwrap());
            let (in_meet, in_join) = (meet.contains(&w).unwrap(), up.contains(&w).unwrap());
            ensure(in_meet == (in1 && in2), || format!("intersection membership of {w}"))?;
            ensure(!(in1 || in2) || in_join, || format!("join misses {w}"))?;
            hits[0] += in_meet as usize;
            hits[1] += in_join as usize;
            hits[2] += 1;
            checked += 1;
        }
        for x in b1.iter().take(2) {
            for y in b2.iter().take(2) {
                ensure(up.contains(&(x * y)).unwrap(), || format!("join misses {x}{y}"))?;
            }
        }
    }
    Ok(format!(
        "100 complete cores; {} words ({} in meet, {} in join)",
        hits[2], hits[0], hits[1]
    ))
}

fn product(rng: &mut StdRng, basis: &[Word], max_factors: usize) -> Word {
    let mut w = Word::identity();
    for _ in 0..rng.gen_range(0..=max_factors) {
        let g = &basis[rng.gen_range(0..basis.len())];
        w = if rng.gen() { &w * g } else { &w * &g.inverse() };
    }
    w
}

fn klein_lattice() -> Outcome {
    let klein = LabeledCore::from_permutations(&[vec![1, 0, 3, 2], vec![2, 3, 0, 1]], 0)
        .map_err(|e| e.to_string())?;
    ensure(klein.is_galois().unwrap(), || "Klein core not Galois".into())?;
    let lat = klein.intermediate_lattice(2).map_err(|e| e.to_string())?;
    ensure(lat.len() == 5, || format!("{} classes", lat.len()))?;
    lat.verify().map_err(|e| e.to_string())?;
    let order = lat.deck().order();
    let degrees: Vec<usize> = lat.classes().iter().map(|c| c.degree).collect();
    ensure(degrees == [1, 2, 2, 2, 4], || format!("degrees {degrees:?}"))?;
    for (i, ci) in lat.classes().iter().enumerate() {
        ensure(ci.degree * ci.subgroup.len() == order, || format!("class {i}: degree"))?;
        let idx = ci.core.index().finite().ok_or("class of infinite index")?;
        ensure(idx == ci.degree, || format!("class {i}: index {idx} vs degree {}", ci.degree))?;
        for (j, cj) in lat.classes().iter().enumerate() {
            let si: BTreeSet<_> = ci.subgroup.iter().collect();
            let sj: BTreeSet<_> = cj.subgroup.iter().collect();
            ensure(lat.le(i, j) == sj.is_subset(&si), || format!("order reversal at ({i},{j})"))?;
        }
    }
    let stab = LabeledCore::from_permutations(&[vec![1, 0, 2], vec![1, 2, 0]], 0).map_err(|e| e.to_string())?;
    ensure(stab.index().finite() == Some(3), || "stabilizer index".into())?;
    ensure(!stab.is_galois().unwrap(), || "stabilizer reported Galois".into())?;
    let deck = stab.deck_group().map_err(|e| e.to_string())?;
    ensure(deck.order() == 1, || format!("|deck| = {}", deck.order()))?;
    Ok("5 classes, degrees [1,2,2,2,4]; index-3 core non-Galois, |deck|=1".into())
}

fn hall_completion() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x7001);
    let mut done = 0;
    let mut max_index = 0;
    while done < 100 {
        let rank = rng.gen_range(2..=3);
        let n_gens = rng.gen_range(1..=2);
        let gens = random_words(&mut rng, rank, n_gens, 6);
        let n_avoid = rng.gen_range(1..=3);
        let c = LabeledCore::from_words(rank, &gens).unwrap();
        let avoid: Vec<Word> = random_words(&mut rng, rank, n_avoid, 6)
            .into_iter()
            .filter(|w| !c.contains(w).unwrap())
            .collect();
        if avoid.is_empty() {
            continue;
        }
        let h = c.hall_complete(&avoid).map_err(|e| format!("instance {done}: {e}"))?;
        ensure(h.is_complete(), || format!("instance {done}: incomplete"))?;
        let idx = h.index().finite().ok_or("infinite index")?;
        max_index = max_index.max(idx);
        for g in &gens {
            ensure(h.contains(g).unwrap(), || format!("instance {done}: lost generator {g}"))?;
        }
        for w in &avoid {
            ensure(!h.contains(w).unwrap(), || format!("instance {done}: contains avoided {w}"))?;
        }
        done += 1;
    }
    Ok(format!("{done} instances, max index {max_index}"))
}

/// Reduced words of length at most `max_len` over `{a, b}`.
fn ball_words(max_len: usize) -> Vec<Word> {
    let mut all = vec![Word::identity()];
    let mut layer = vec![Word::identity()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for l in ["a", "A", "b", "B"] {
                let x: Word = l.parse().unwrap();
                let v = w * &x;
                if v.len() == w.len() + 1 {
                    next.push(v);
                }
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    all
}

/// Reduced products of at most `max_factors` generators or inverses,
/// kept when of length at most `max_len`.
fn product_oracle(gens: &[Word], max_factors: usize, max_len: usize) -> BTreeSet<Word> {
    let letters: Vec<Word> = gens.iter().flat_map(|g| [g.clone(), g.inverse()]).collect();
    let mut seen = BTreeSet::from([Word::identity()]);
    let mut layer = vec![Word::identity()];
    for _ in 0..max_factors {
        let mut next = Vec::new();
        for w in &layer {
            for x in &letters {
                next.push(w * x);
            }
        }
        next.sort();
        next.dedup();
        for w in &next {
            if w.len() <= max_len {
                seen.insert(w.clone());
            }
        }
        layer = next;
    }
    seen
}

fn is_nielsen_reduced(gens: &[Word]) -> bool {
    let xs: Vec<Word> = gens.iter().flat_map(|g| [g.clone(), g.inverse()]).collect();
    if xs.iter().any(|x| x.is_empty()) {
        return false;
    }
    for x in &xs {
        for y in &xs {
            let xy = x * y;
            if xy.is_empty() {
                continue;
            }
            if xy.len() < x.len() || xy.len() < y.len() {
                return false;
            }
            for z in &xs {
                let yz = y * z;
                if yz.is_empty() {
                    continue;
                }
                let xyz = &xy * z;
                if xyz.len() + y.len() <= x.len() + z.len() {
                    return false;
                }
            }
        }
    }
    true
}

fn oracle_equivalence() -> Outcome {
    let ball = ball_words(6);
    ensure(ball.len() == 1457, || format!("ball has {} words", ball.len()))?;
    let full = product_oracle(&Word::parse_list("a,b").unwrap(), 6, 6);
    ensure(full.len() == ball.len(), || "oracle incomplete on the full group".into())?;
    let squares = product_oracle(&Word::parse_list("aa").unwrap(), 8, 6);
    let expected: BTreeSet<Word> = Word::parse_list("1,aa,AA,aaaa,AAAA,aaaaaa,AAAAAA").unwrap().into_iter().collect();
    ensure(squares == expected, || format!("oracle on <aa>: {squares:?}"))?;

    let mut rng = StdRng::seed_from_u64(0x8001);
    let mut tested = 0;
    let mut members = 0;
    while tested < 50 {
        let gens = random_words(&mut rng, 2, 2, 4);
        if !is_nielsen_reduced(&gens) {
            continue;
        }
        let c = LabeledCore::from_words(2, &gens).unwrap();
        let oracle = product_oracle(&gens, 8, 6);
        for w in &ball {
            let got = c.contains(w).unwrap();
            ensure(got == oracle.contains(w), || {
                format!("<{},{}>: contains({w})={got}", gens[0], gens[1])
            })?;
            members += got as usize;
        }
        tested += 1;
    }
    Ok(format!("{tested} subgroups x {} words, {members} members", ball.len()))
}

struct Criterion {
    id: u32,
    name: &'static str,
    budget: Duration,
    run: fn() -> Outcome,
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { id: 1, name: "profile example", budget: Duration::from_millis(1), run: profile_example },
        Criterion { id: 2, name: "checker count", budget: Duration::from_secs(5), run: checker_count },
        Criterion { id: 3, name: "rank estimate", budget: Duration::from_secs(10), run: rank_estimate },
        Criterion { id: 4, name: "comparison table", budget: Duration::from_secs(1), run: comparison_table },
        Criterion { id: 5, name: "dictionary laws", budget: Duration::from_secs(10), run: dictionary_laws },
        Criterion { id: 6, name: "Galois lattice", budget: Duration::from_secs(1), run: klein_lattice },
        Criterion { id: 7, name: "Hall completion", budget: Duration::from_secs(5), run: hall_completion },
        Criterion { id: 8, name: "oracle equivalence", budget: Duration::from_secs(30), run: oracle_equivalence },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let verdict = match outcome {
            Ok(detail) if elapsed <= c.budget => ("PASS", detail),
            Ok(detail) => ("FAIL", format!("{detail}; over budget")),
            Err(e) => ("FAIL", e),
        };
        if verdict.0 == "FAIL" {
            failed += 1;
        }
        println!(
            "{} criterion {} ({}): {} [{:.3?} / {:?}]",
            verdict.0, c.id, c.name, verdict.1, elapsed, c.budget
        );
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
