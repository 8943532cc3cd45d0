//! Reports and the command dispatcher behind the `wtrans` binary.

pub mod cli;
pub mod dataset;
pub mod document;

pub use cli::Command;
pub use dataset::{validate_map_dataset, DatasetReport, MapTableRow};
pub use document::{Num, Provenance, ReportDocument, Section, Value};

use crate::bielliptic::{bielliptic_window, garcia_transitivity_test, scan_nontransitive};
use crate::fermat::{fermat_transitivity, orbit_enumerate, weight_accounting, FermatPoint};
use crate::fixedpoints::{is_psl2_element_order, psl2q_fixed_points, schoeneberg_is_weierstrass};
use crate::orbits::{classify, hurwitz_divisibility, orbit_profile, solve_weight_equation_sharded};
use crate::platonic::{enumerate_transitive_hyperelliptic, SurfaceKind};
use crate::psl::{
    hurwitz_genus, is_hurwitz_psl2q, modular_genus, modular_surface_verdict, order_census_sharded,
    psl2_order, psl2q_transitivity_verdict, xtq_genus,
};
use crate::surface::{total_weight, total_weight_wide, Genus};
use crate::{arith, Error, Result};

use Provenance::{Computed, OracleVerified, Published};

/// Largest `n` for which the Fermat report also enumerates orbits.
const FERMAT_ORBIT_LIMIT: u64 = 12;

/// Runs one command. `workers` bounds the threads used by range scans.
pub fn run(command: &Command, workers: usize) -> Result<ReportDocument> {
    match command {
        Command::Hyperelliptic { max_genus } => hyperelliptic(*max_genus),
        Command::Hurwitz { max_q } => hurwitz(*max_q),
        Command::OrbitWeights {
            order,
            periods,
            target,
            mask,
        } => orbit_weights(*order, periods, *target, mask.as_ref(), workers),
        Command::PslVerdict { q, t } => psl_verdict(*q, *t),
        Command::Modular { p } => modular(*p),
        Command::BiellipticScan { from, to } => bielliptic(*from, *to, workers),
        Command::Fermat { n } => fermat(*n),
        Command::ValidateTables => validate_tables(),
        Command::Census { q } => census(*q, workers),
    }
}

fn hyperelliptic(max_genus: u64) -> Result<ReportDocument> {
    let covers = enumerate_transitive_hyperelliptic(Genus::new(max_genus))?;
    let mut doc = ReportDocument::new("hyperelliptic")
        .param("max-genus", max_genus)
        .cite("classification of hyperelliptic surfaces with a group transitive on the Weierstrass points")
        .cite("Riemann–Hurwitz formula");
    for c in covers {
        let cover = &c.cover;
        let kind = match c.kind {
            SurfaceKind::AccolaMaclachlan => "Accola–Maclachlan",
            SurfaceKind::Sporadic => "sporadic",
        };
        let mut s = Section::new(format!("genus {}: {kind}", cover.genus))
            .int("genus", cover.genus.get(), Computed)
            .text("base", format!("{} {}", cover.base.family, cover.locus), Computed)
            .int("branch points", cover.branch_points, Computed)
            .text("group", cover.aut_group.name.clone(), Computed)
            .int("group order", cover.aut_order(), Computed)
            .text("lifted signature", cover.lifted_signature.to_string(), Computed)
            .flag("transitive", cover.transitive_on_wp, Computed);
        if let Some(map) = &cover.map {
            s = s.text("regular map", map.to_string(), Computed);
        }
        if let Some(p) = &cover.aut_group.presentation {
            s = s.text("presentation", p.clone(), Published);
        }
        for note in cover.notes.iter().chain(&c.annotations) {
            s = s.text("note", note.clone(), Computed);
        }
        doc = doc.section(s);
    }
    Ok(doc)
}

fn wide_weight(g: Genus) -> Result<i128> {
    i128::try_from(total_weight_wide(g)?).map_err(|_| Error::Overflow("total_weight"))
}

fn hurwitz(max_q: u64) -> Result<ReportDocument> {
    let mut doc = ReportDocument::new("hurwitz")
        .param("max-q", max_q)
        .cite("Macbeath's classification of Hurwitz groups PSL(2,q)")
        .cite("necessary condition |G_p|(g^3-g)/|G| integral for a transitive action");
    let mut found = Vec::new();
    for q in (2..=max_q).filter(|&q| arith::prime_power(q).is_some()) {
        let check = is_hurwitz_psl2q(q)?;
        if !check.is_hurwitz {
            continue;
        }
        found.push(q);
        let order = psl2_order(q)?;
        let g = hurwitz_genus(order)?;
        let admissible: Vec<u64> = hurwitz_divisibility(g)?.into_iter().collect();
        doc = doc.section(
            Section::new(format!("PSL(2,{q})"))
                .text("clause", check.reason, Computed)
                .int("order", order, Computed)
                .int("genus", g.get(), Computed)
                .int("total weight", wide_weight(g)?, Computed)
                .ints("admissible stabiliser orders", &admissible, Computed),
        );
    }
    Ok(doc.section(Section::new("summary").ints("hurwitz q", &found, Computed)))
}

fn orbit_weights(
    order: u64,
    periods: &[u64],
    target: u64,
    mask: Option<&crate::orbits::ZeroMask>,
    workers: usize,
) -> Result<ReportDocument> {
    let profile = orbit_profile(order, periods)?;
    let mut set = solve_weight_equation_sharded(&profile.orbit_sizes, target, workers)?;
    set.profile = Some(profile.clone());
    let vectors = |vs: Vec<Vec<u64>>| Value::Vectors(vs.into_iter().map(|v| v.into_iter().map(Num::from).collect()).collect());
    let mut doc = ReportDocument::new("orbit-weights")
        .param("order", order)
        .param("periods", periods.iter().map(u64::to_string).collect::<Vec<_>>().join(","))
        .param("target", target)
        .cite("orbit-stabiliser theorem: orbit sizes |G|/|G_p|")
        .cite("total Weierstrass weight g^3 - g")
        .section(
            Section::new("orbits")
                .ints("stabiliser orders", &profile.stabilizer_orders, Computed)
                .ints("orbit sizes", &profile.orbit_sizes, Computed),
        );
    if let Some(m) = mask {
        doc = doc.param("mask", m);
    }
    let mut s = Section::new("solutions")
        .int("count", set.len() as u64, Computed)
        .claim("by orbit count", vectors(set.by_orbit_count()), Computed);
    if !set.is_empty() {
        let c = classify(&set, mask)?;
        s = s
            .int("surviving", c.surviving.len() as u64, Computed)
            .claim("surviving solutions", vectors(c.surviving.clone()), Computed);
        let guaranteed: Vec<u64> = c.guaranteed.iter().map(|&i| i as u64).collect();
        s = s.ints("guaranteed Weierstrass orbits", &guaranteed, Computed);
        doc = doc.section(s).section(Section::new("classification").verdict(&c.verdict, Computed));
    } else {
        doc = doc.section(s);
    }
    Ok(doc)
}

fn psl_verdict(q: u64, t: u64) -> Result<ReportDocument> {
    let v = psl2q_transitivity_verdict(q, t)?;
    let g = xtq_genus(q, t)?;
    let mut fixed = Section::new("fixed points");
    for d in [2, 3, t] {
        if d != 1 && is_psl2_element_order(q, d) {
            let f = psl2q_fixed_points(q, &[2, 3, t], d)?;
            fixed = fixed
                .int(format!("order {d}"), f, Computed)
                .flag(format!("order {d} fixes Weierstrass points"), schoeneberg_is_weierstrass(f), Computed);
        }
    }
    Ok(ReportDocument::new("psl-verdict")
        .param("q", q)
        .param("t", t)
        .cite("Macbeath's fixed-point formula for PSL(2,q)")
        .cite("Schoeneberg: an automorphism fixing more than 4 points fixes Weierstrass points")
        .section(
            Section::new("surface")
                .int("group order", psl2_order(q)?, Computed)
                .int("genus", g.get(), Computed)
                .int("total weight", wide_weight(g)?, Computed),
        )
        .section(fixed)
        .section(Section::new("verdict").verdict(&v, Published)))
}

fn modular(p: u64) -> Result<ReportDocument> {
    let g = modular_genus(p)?;
    let v = modular_surface_verdict(p)?;
    Ok(ReportDocument::new("modular")
        .param("p", p)
        .cite("PSL(2,p) is transitive on the Weierstrass points of X(p) only for p = 7")
        .section(Section::new("surface").int("genus", g.get(), Computed))
        .section(Section::new("verdict").verdict(&v, Published)))
}

fn bielliptic(from: u64, to: u64, workers: usize) -> Result<ReportDocument> {
    let hits = scan_nontransitive(Genus::new(from), Genus::new(to), workers)?;
    let genera: Vec<u64> = hits.iter().map(|g| g.get()).collect();
    let mut doc = ReportDocument::new("bielliptic-scan")
        .param("from", from)
        .param("to", to)
        .cite("Kato's bi-elliptic weight criterion for g >= 11")
        .cite("Garcia's count |W| = 2g + 10 + nu(g)")
        .section(Section::new("scan").ints("not excluded", &genera, Computed));
    for g in hits {
        let w = bielliptic_window(g)?;
        let v = garcia_transitivity_test(g)?;
        doc = doc.section(
            Section::new(format!("genus {g}"))
                .ints("candidate weights", &[w.candidate_weights.0, w.candidate_weights.1], Computed)
                .int("total weight", total_weight(g)?, Computed)
                .verdict(&v, Computed),
        );
    }
    Ok(doc)
}

fn fermat(n: u64) -> Result<ReportDocument> {
    let v = fermat_transitivity(n)?;
    let a = weight_accounting(n)?;
    let mut acc = Section::new("accounting")
        .int("genus", a.genus.get(), Computed)
        .int("total weight", a.total, Computed)
        .int("trivial points", a.trivial_points, Computed)
        .int("trivial weight", a.trivial_weight, Published)
        .int("trivial contribution", a.trivial_contribution, Computed)
        .int("leopoldt points", a.leopoldt_points, Computed);
    if let Some(b) = a.leopoldt_weight {
        acc = acc
            .int("leopoldt weight bound", b.bound, Published)
            .flag("leopoldt weight exact", b.exact, Published);
    }
    acc = acc
        .int("leopoldt contribution", a.leopoldt_contribution, Computed)
        .int("residual", a.residual, Computed)
        .text("conclusion", format!("{:?}", a.conclusion), Computed);
    let mut doc = ReportDocument::new("fermat")
        .param("n", n)
        .cite("Hasse's weight of the trivial points")
        .cite("Towse's bound on the weight of the Leopoldt points")
        .cite("Aut F_n = (Z_n + Z_n) x| S3 of order 6n^2")
        .section(acc);
    if n <= FERMAT_ORBIT_LIMIT {
        let mut orbits = Section::new("orbits")
            .int("trivial orbit", orbit_enumerate(n, FermatPoint::trivial(0, 0))?, OracleVerified);
        if n >= 5 {
            orbits = orbits.int("leopoldt orbit", orbit_enumerate(n, FermatPoint::leopoldt(0, 0, 0))?, OracleVerified);
        }
        doc = doc.section(orbits);
    }
    Ok(doc.section(Section::new("verdict").verdict(&v, Computed)))
}

fn validate_tables() -> Result<ReportDocument> {
    let report = validate_map_dataset()?;
    let mut doc = ReportDocument::new("validate-tables")
        .cite("census of regular maps of genus 2 to 5")
        .cite("Euler formula V - E + F = 2 - 2g");
    for r in &report.rows {
        let mut s = Section::new(format!("row ({})", r.row))
            .text("map", r.map.to_string(), Published)
            .text("status", format!("{:?}", r.status), Computed)
            .int("weighted sum", r.weighted_sum, Computed)
            .int("total weight", r.total_weight, Computed)
            .int("transitive weight", r.necessary_weight, Computed);
        for n in &r.notes {
            s = s.text("note", n.clone(), Published);
        }
        doc = doc.section(s);
    }
    Ok(doc.section(Section::new("summary").int("rows passed", report.passed() as u64, Computed)))
}

fn census(q: u64, workers: usize) -> Result<ReportDocument> {
    let c = order_census_sharded(q, workers)?;
    let mut counts = Section::new("element orders");
    for (order, count) in &c.counts {
        counts = counts.int(format!("order {order}"), *count, OracleVerified);
    }
    let valid = c.counts.keys().all(|&d| is_psl2_element_order(q, d));
    Ok(ReportDocument::new("census")
        .param("q", q)
        .cite("|PSL(2,q)| = q(q^2 - 1)/gcd(2, q - 1)")
        .section(
            Section::new("group")
                .int("order", c.group_order, Computed)
                .int("enumerated", c.total(), OracleVerified)
                .flag("orders pass the arithmetic test", valid, OracleVerified),
        )
        .section(counts))
}
