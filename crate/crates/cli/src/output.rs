//! CSV serialisation of sweep records and the text report of `analyze`.
//!
//! Numbers are written with 16 significant digits so that every 1e-9-level
//! invariant survives a round trip through a standard CSV reader.

use std::io::{self, Write};

use qbell_core::bell::BellResult;
use qbell_core::measures::MeasureReport;
use qbell_core::sweep::{BoundaryRecord, Family, SweepRecord};

/// Fixed-exponent decimal with 16 significant digits.
pub fn number(x: f64) -> String {
    format!("{x:.15e}")
}

pub const FIG1_HEADER: &str = "curve,family,gamma,xi,tangle,eof,linear_entropy,b_max";
pub const FIG2_HEADER: &str = "curve,family,gamma,xi,tangle,linear_entropy,residual";

fn fig1_curve(family: Family) -> &'static str {
    match family {
        Family::PureNonmax => "a",
        Family::Werner => "b",
        Family::Mems => "c",
        Family::MemsLike => "d",
    }
}

pub fn write_fig1_csv<W: Write>(w: &mut W, records: &[SweepRecord]) -> io::Result<()> {
    writeln!(w, "{FIG1_HEADER}")?;
    for r in records {
        writeln!(
            w,
            "{},{},{},{},{},{},{},{}",
            fig1_curve(r.family),
            r.family,
            number(r.gamma),
            number(r.xi),
            number(r.tangle),
            number(r.eof),
            number(r.linear_entropy),
            number(r.b_max),
        )?;
    }
    Ok(())
}

pub fn write_fig2_csv<W: Write>(w: &mut W, records: &[BoundaryRecord]) -> io::Result<()> {
    writeln!(w, "{FIG2_HEADER}")?;
    for r in records {
        let curve = match r.family {
            qbell_core::sweep::BoundaryFamily::WernerLike => "a",
            qbell_core::sweep::BoundaryFamily::MemsLike => "b",
        };
        writeln!(
            w,
            "{},{},{},{},{},{},{}",
            curve,
            r.family,
            number(r.gamma),
            number(r.xi),
            number(r.tangle),
            number(r.linear_entropy),
            number(r.residual),
        )?;
    }
    Ok(())
}

/// The text report printed by `analyze`.
pub fn write_report<W: Write>(
    w: &mut W,
    source: &str,
    seed: u64,
    measures: &MeasureReport,
    analytic: &BellResult,
    numeric: &BellResult,
) -> io::Result<()> {
    writeln!(w, "qbell analyze (optimizer seed {seed})")?;
    writeln!(w, "state: {source}")?;
    writeln!(w, "concurrence: {:.15}", measures.concurrence)?;
    writeln!(w, "tangle: {:.15}", measures.tangle)?;
    writeln!(w, "eof: {:.15}", measures.eof)?;
    writeln!(w, "linear_entropy: {:.15}", measures.linear_entropy)?;
    writeln!(w, "purity: {:.15}", measures.purity)?;
    writeln!(w, "b_max_analytic: {:.15}", analytic.b_max)?;
    writeln!(w, "b_max_numeric: {:.15}", numeric.b_max)?;
    writeln!(w, "optimal_settings (analytic):")?;
    for (name, s) in [
        ("a", analytic.settings.a),
        ("a_prime", analytic.settings.a_prime),
        ("b", analytic.settings.b),
        ("b_prime", analytic.settings.b_prime),
    ] {
        writeln!(w, "  {name}: phi={:.15} phibar={:.15}", s.phi, s.phibar)?;
    }
    writeln!(
        w,
        "VIOLATES: {}",
        if analytic.violates() { "yes" } else { "no" }
    )?;
    Ok(())
}
