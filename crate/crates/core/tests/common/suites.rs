//! Corpus-wide checks shared by the property tests and the acceptance run.

use taubound::algebra::loewy_length;
use taubound::endo::derdim_estimate;
use taubound::rep::{decompose, hom_dim, Rep};
use taubound::report::{bound_report, tilting_proxy_check, BoundStatus};
use taubound::tau::{tau, Labeler, Mutator, PairClass, SttPair, SummandRef};

use super::{corpus, graph, module_pool, registry, same_multiset, CORPUS};

pub type Check = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn summands(m: &Rep) -> Vec<Rep> {
    decompose(m).unwrap().summands.into_iter().map(|s| s.module).collect()
}

/// Every pair drawn from the first members of each pool.
pub fn krull_schmidt() -> Check {
    for a in corpus() {
        let pool = module_pool(&a);
        let pool = &pool[..pool.len().min(10)];
        for (i, m) in pool.iter().enumerate() {
            for n in &pool[i..] {
                let mut parts = summands(m);
                parts.extend(summands(n));
                ensure!(
                    same_multiset(&summands(&m.direct_sum(n)), &parts),
                    "{}: {:?} + {:?}",
                    a.name(),
                    m.dims(),
                    n.dims()
                );
            }
        }
    }
    Ok(())
}

pub fn yoneda() -> Check {
    for a in corpus() {
        for m in module_pool(&a) {
            for i in 0..a.vertex_count() {
                ensure!(
                    hom_dim(&Rep::projective(&a, i), &m) == m.dims()[i],
                    "{}: {:?} at {i}",
                    a.name(),
                    m.dims()
                );
            }
        }
    }
    Ok(())
}

pub fn tau_of_projectives() -> Check {
    for a in corpus() {
        for i in 0..a.vertex_count() {
            ensure!(tau(&Rep::projective(&a, i)).is_zero(), "{}: τP{} ≠ 0", a.name(), i + 1);
        }
    }
    Ok(())
}

pub fn mutation_involution() -> Check {
    for a in corpus() {
        let g = graph(&a);
        let mutator = Mutator::new(&a);
        let mut labeler = Labeler::new(&a);
        let mut key = |pair: &SttPair| {
            let mut l: Vec<String> = pair.module.iter().map(|m| labeler.label(m).unwrap()).collect();
            l.sort();
            (l, pair.support.clone())
        };
        for node in &g.nodes {
            let p = &node.pair;
            let refs = (0..p.module.len())
                .map(SummandRef::Module)
                .chain(p.support.iter().map(|&v| SummandRef::Support(v)));
            for at in refs {
                let once = mutator.mutate(p, at).map_err(|e| e.to_string())?;
                let twice = mutator.mutate(&once.pair, once.introduced).map_err(|e| e.to_string())?;
                ensure!(key(&twice.pair) == key(p), "{} at {}", a.name(), node.name);
            }
        }
    }
    Ok(())
}

pub fn regularity() -> Check {
    for a in corpus() {
        let g = graph(&a);
        for (i, node) in g.nodes.iter().enumerate() {
            let n = a.vertex_count();
            ensure!(
                node.pair.size() == n && g.degree(i) == n,
                "{} at {}: degree {}",
                a.name(),
                node.name,
                g.degree(i)
            );
        }
    }
    Ok(())
}

pub fn loewy_consistency() -> Check {
    let reg = registry();
    for a in corpus() {
        if let Some(v) = reg.exact(a.name()) {
            let ll = loewy_length(&a).unwrap();
            ensure!(v < ll, "{}: der.dim {v} but LL = {ll}", a.name());
            ensure!(
                derdim_estimate(&a, &reg).unwrap().is_exact(),
                "{}: registry value ignored",
                a.name()
            );
        }
    }
    Ok(())
}

pub fn reports_on_every_node() -> Check {
    let reg = registry();
    for a in corpus() {
        for node in graph(&a).nodes {
            let m = node.pair.module_sum(&a);
            let rep = bound_report(&m, &node.pair.support, &reg).map_err(|e| format!("{}: {e}", a.name()))?;
            let sincere = matches!(node.class, PairClass::Tilting | PairClass::TauTiltingNotTilting);
            ensure!(
                (rep.status == BoundStatus::Inapplicable) == !sincere,
                "{} at {}",
                a.name(),
                node.name
            );
            if let (true, Some(rhs)) = (rep.lhs.is_exact(), rep.rhs) {
                ensure!(
                    rep.lhs.value <= rhs.value,
                    "{} at {}: bound violated",
                    a.name(),
                    node.name
                );
            }
            ensure!(
                !rep.lhs.is_exact() || rep.lhs.value <= rep.loewy_rhs,
                "{}: Loewy bound violated",
                a.name()
            );
            if node.class == PairClass::Tilting && reg.exact(a.name()).is_some() {
                ensure!(
                    rep.status == BoundStatus::Tight,
                    "{} at {}: {}",
                    a.name(),
                    node.name,
                    rep.status
                );
            }
        }
    }
    Ok(())
}

pub fn classification_consistency() -> Check {
    for a in corpus() {
        for node in graph(&a).nodes {
            let m = node.pair.module_sum(&a);
            ensure!(
                (node.class == PairClass::Tilting) == m.is_faithful(),
                "{} at {}",
                a.name(),
                node.name
            );
            let tau_tilting = matches!(node.class, PairClass::Tilting | PairClass::TauTiltingNotTilting);
            ensure!(tau_tilting == m.is_sincere(), "{} at {}", a.name(), node.name);
        }
    }
    Ok(())
}

pub fn tilting_proxy() -> Check {
    for a in corpus() {
        for node in graph(&a).nodes {
            let m = node.pair.module_sum(&a);
            let p = tilting_proxy_check(&m, &node.pair.support).map_err(|e| format!("{}: {e}", a.name()))?;
            ensure!(p.passed, "{} at {}:\n{}", a.name(), node.name, p.to_text());
        }
    }
    Ok(())
}

pub fn cli_output(args: &[&str]) -> Result<String, String> {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = taubound::cli::run(args.iter().copied(), &mut out, &mut err);
    if code != 0 {
        return Err(format!("exit {code}: {}", String::from_utf8_lossy(&err)));
    }
    Ok(String::from_utf8(out).unwrap())
}

pub fn data(file: &str) -> String {
    format!("{}/data/{file}", env!("CARGO_MANIFEST_DIR"))
}

pub fn byte_identical_reruns() -> Check {
    for (name, _) in CORPUS {
        let alg = data(&format!("{name}.alg"));
        let run = |seed: &str| {
            cli_output(&[
                "taubound",
                "enumerate",
                "--algebra",
                &alg,
                "--format",
                "json",
                "--seed",
                seed,
            ])
        };
        let first = run("7")?;
        ensure!(first == run("7")?, "{name}: rerun differs");
        ensure!(first == run("12345")?, "{name}: output depends on the seed");
    }
    let report = [
        "taubound",
        "report",
        "--algebra",
        &data("exA.alg"),
        "--module",
        "P(1)+S(1)",
    ];
    ensure!(cli_output(&report)? == cli_output(&report)?, "report rerun differs");
    Ok(())
}
