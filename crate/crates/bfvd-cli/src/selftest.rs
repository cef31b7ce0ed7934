//! Built-in cross-check suites: small, deterministic versions of the
//! property tests, runnable from the installed binary. Prints one line
//! per suite; any failure exits with the contract status.

use bfvd::bfvd_kernel::kernelize_bfvd;
use bfvd::biclique::{
    contains_biclique, enumerate_smaller_sides, enumerate_smaller_sides_degenerate,
    reduce_biclique_membership,
};
use bfvd::gen::{nonisomorphic_graphs, random_graph, rng_for, tree_plus_edges};
use bfvd::harness::graph_roundtrip_ok;
use bfvd::instance::{BddInstance, BfvdInstance, WbddInstance};
use bfvd::params::{minimum_fvs, minimum_vertex_cover};
use bfvd::reduce::hardness_gadget;
use bfvd::solvers::oracle::{bdd_decide, solve_oracle_with_limit};
use bfvd::solvers::{branching, degenerate, fvn, vc};
use bfvd::wbdd::{build_replacement_table, kernelize_bdd};

struct Suite {
    failures: Vec<String>,
}

impl Suite {
    fn check(&mut self, name: &str, ok: bool, detail: String) {
        if ok {
            println!("[ok]   {name} {detail}");
        } else {
            println!("[FAIL] {name} {detail}");
            self.failures.push(name.to_string());
        }
    }
}

pub fn run() -> u8 {
    let mut suite = Suite {
        failures: Vec::new(),
    };

    // replacement table integrity across r
    let mut ok = true;
    let mut detail = String::new();
    for r in [2u32, 3, 4] {
        match build_replacement_table(r) {
            Ok(t) => {
                if t.len() != 243 || t.reducible() != 242 {
                    ok = false;
                }
                detail = format!(
                    "(patterns={} reducible={} profiles={})",
                    t.len(),
                    t.reducible(),
                    t.distinct_profiles()
                );
            }
            Err(e) => {
                ok = false;
                detail = format!("({e})");
            }
        }
    }
    suite.check("replacement-table", ok, detail);

    // instance round-trips
    let mut ok = true;
    for seed in 0..20u64 {
        let g = random_graph(8, 0.4, &mut rng_for(seed));
        if !graph_roundtrip_ok(&g) {
            ok = false;
        }
    }
    suite.check("parse-roundtrip", ok, "(20 seeded graphs)".into());

    // backend agreement
    let mut ok = true;
    for seed in 0..15u64 {
        let g = random_graph(8, 0.45, &mut rng_for(100 + seed));
        for (i, j) in [(1, 2), (2, 2), (2, 3)] {
            if enumerate_smaller_sides(&g, i, j) != enumerate_smaller_sides_degenerate(&g, i, j)
            {
                ok = false;
            }
        }
    }
    suite.check("enumeration-backends", ok, "(15 seeded graphs x 3 params)".into());

    // side union covers every edge after the membership reduction
    let mut ok = true;
    let mut checked = 0;
    for seed in 0..25u64 {
        let g = random_graph(10, 0.35, &mut rng_for(200 + seed));
        for (i, j) in [(1, 2), (2, 2)] {
            let (red, _) = reduce_biclique_membership(&g, i, j);
            let union = enumerate_smaller_sides(&red, i, j).union();
            checked += 1;
            if red
                .edges()
                .iter()
                .any(|&(u, v)| !union.contains(&u) && !union.contains(&v))
            {
                ok = false;
            }
        }
    }
    suite.check("cover-lemma", ok, format!("({checked} reductions)"));

    // solver agreement vs the oracle on exhaustive small graphs
    let mut ok = true;
    let mut instances = 0;
    for n in 1..=5 {
        for g in nonisomorphic_graphs(n) {
            for (i, j) in [(1, 1), (1, 2), (2, 2), (2, 3)] {
                for k in 0..=2usize {
                    let inst = BfvdInstance::new(g.clone(), i, j, k).unwrap();
                    let want = solve_oracle_with_limit(&inst, usize::MAX).unwrap().yes;
                    instances += 1;
                    let cover = minimum_vertex_cover(&g);
                    if vc::solve_vc(&inst, &cover).unwrap().yes != want {
                        ok = false;
                    }
                    if branching::solve_branching(&inst).unwrap().yes != want {
                        ok = false;
                    }
                    if degenerate::solve_degenerate(&inst).unwrap().yes != want {
                        ok = false;
                    }
                    if i >= 2 {
                        let d = minimum_fvs(&g, None).unwrap();
                        if fvn::solve_fvn(&inst, &d).unwrap().yes != want {
                            ok = false;
                        }
                    }
                }
            }
        }
    }
    suite.check("solver-agreement", ok, format!("({instances} instances)"));

    // kernel answer preservation
    let mut ok = true;
    let mut runs = 0;
    for seed in 0..40u64 {
        let mut rng = rng_for(300 + seed);
        let g = random_graph(4 + (seed as usize % 6), 0.4, &mut rng);
        let r = (seed % 3) as u32;
        let k = (seed % 4) as i64;
        let before = bdd_decide(&g, r, k);
        let (kernel, _) = kernelize_bdd(&g, r, k).unwrap();
        let after = kernel
            .decided()
            .unwrap_or_else(|| bdd_decide(&kernel.graph, kernel.r, kernel.k));
        runs += 1;
        if before != after {
            ok = false;
        }
        let inst = BfvdInstance::new(g.clone(), 2, 2, k.max(0) as usize).unwrap();
        let want = solve_oracle_with_limit(&inst, usize::MAX).unwrap().yes;
        let (bk, _) = kernelize_bfvd(&inst).unwrap();
        let got = solve_oracle_with_limit(&bk, usize::MAX).unwrap().yes;
        runs += 1;
        if want != got {
            ok = false;
        }
    }
    suite.check("kernel-preservation", ok, format!("({runs} kernels)"));

    // wbdd trace replay
    let mut ok = true;
    for seed in 0..10u64 {
        let g = tree_plus_edges(20, 2 + (seed as usize % 3), &mut rng_for(400 + seed));
        let (kernel, trace) = kernelize_bdd(&g, 2, 2).unwrap();
        match trace.replay_wbdd(&WbddInstance::from_bdd(g, 2, 2)) {
            Ok(replayed) => {
                if replayed.graph != kernel.graph || replayed.k != kernel.k {
                    ok = false;
                }
            }
            Err(_) => ok = false,
        }
    }
    suite.check("trace-replay", ok, "(10 seeded kernels)".into());

    // gadget equivalence
    let mut ok = true;
    let mut runs = 0;
    for seed in 0..12u64 {
        let mut rng = rng_for(500 + seed);
        let n = 4 + (seed as usize % 2);
        let g = random_graph(n, 0.4, &mut rng);
        let r = (seed % 2) as u32;
        let k = (seed % 3) as i64;
        let bdd = BddInstance::new(g.clone(), r, k);
        let gadget = hardness_gadget(&bdd, 2).unwrap();
        let want = bdd_decide(&g, r, k);
        let got = solve_oracle_with_limit(&gadget, usize::MAX).unwrap().yes;
        runs += 1;
        if want != got {
            ok = false;
        }
    }
    suite.check("gadget-equivalence", ok, format!("({runs} instances)"));

    // a biclique witness really is a biclique
    let mut ok = true;
    for seed in 0..20u64 {
        let g = random_graph(9, 0.5, &mut rng_for(600 + seed));
        if let Some(w) = contains_biclique(&g, 2, 2) {
            for s in &w.side {
                for t in &w.larger {
                    if !g.has_edge(*s, *t) {
                        ok = false;
                    }
                }
            }
        }
    }
    suite.check("witness-validity", ok, "(20 seeded graphs)".into());

    if suite.failures.is_empty() {
        println!("selftest: all suites passed");
        0
    } else {
        println!("selftest: {} suite(s) FAILED", suite.failures.len());
        3
    }
}
