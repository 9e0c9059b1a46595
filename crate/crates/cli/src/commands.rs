use std::fs;
use std::io::Write;
use std::path::Path;

use rayon::prelude::*;
use topk_info::factoradic::unrank;
use topk_info::measures::{canberra_topk, footrule_ext, info_cost, info_total, kendall_ext, perm_measures};
use topk_info::{parse_list, top_k, RankedList};

use crate::args::{Cli, Command, Format, InfoArgs, MatrixArgs, MeasureFlags, MeasureKind, PermscanArgs, SweepArgs};
use crate::error::CliError;
use crate::output::{fmt4, InfoRecord, SweepRow, PERMSCAN_HEADER, SWEEP_HEADER};

pub fn read_list(path: &Path) -> Result<RankedList, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_path_buf(),
        source,
    })?;
    parse_list(&text).map_err(|source| CliError::List {
        path: path.to_path_buf(),
        source,
    })
}

fn reject_commas(path: &Path, list: &RankedList) -> Result<(), CliError> {
    match list.iter().position(|l| l.contains(',')) {
        Some(i) => Err(CliError::CommaInLabel {
            path: path.to_path_buf(),
            rank: i + 1,
        }),
        None => Ok(()),
    }
}

pub fn run(cli: Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Info(args) => info(&args, out),
        Command::Sweep(args) => sweep(&args, out),
        Command::Permscan(args) => permscan(&args, out),
        Command::Matrix(args) => matrix(&args, out),
    }
}

/// Measure and baselines for one ordered pair of equal-length lists.
pub fn compute_info(t1: &RankedList, t2: &RankedList, flags: &MeasureFlags) -> Result<InfoRecord, CliError> {
    let domain = flags.domain();
    let opts = flags.options();
    let kendall = flags.kendall()?;
    Ok(InfoRecord {
        report: info_total(t1, t2, domain, opts)?,
        info_cost: info_cost(t1, t2, domain, opts)?,
        footrule_ext: footrule_ext(t1, t2)?,
        kendall_ext: kendall_ext(t1, t2, kendall)?,
        canberra: canberra_topk(t1, t2)?,
    })
}

pub fn info(args: &InfoArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let a = read_list(&args.file_a)?;
    let b = read_list(&args.file_b)?;
    if args.format == Format::Csv {
        reject_commas(&args.file_a, &a)?;
        reject_commas(&args.file_b, &b)?;
    }
    let k = args.k.unwrap_or_else(|| a.len().min(b.len()));
    let record = compute_info(&top_k(&a, k)?, &top_k(&b, k)?, &args.flags)?;
    match args.format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, &record.to_json()).map_err(std::io::Error::from)?;
            writeln!(out)?;
        }
        Format::Csv => out.write_all(record.to_csv().as_bytes())?,
    }
    Ok(())
}

/// Rows for `k = k_min, k_min + step, ...` up to `k_max`, in k order.
pub fn sweep_rows(
    a: &RankedList,
    b: &RankedList,
    k_min: usize,
    k_max: usize,
    step: usize,
    flags: &MeasureFlags,
) -> Result<Vec<SweepRow>, CliError> {
    if k_min == 0 || step == 0 || k_min > k_max {
        return Err(CliError::KRange { k_min, k_max, step });
    }
    // surface size errors before fanning out
    top_k(a, k_max)?;
    top_k(b, k_max)?;
    let ks: Vec<usize> = (k_min..=k_max).step_by(step).collect();
    ks.into_par_iter()
        .map(|k| {
            let (t1, t2) = (top_k(a, k)?, top_k(b, k)?);
            let rec = compute_info(&t1, &t2, flags)?;
            Ok(SweepRow {
                k,
                info_total: rec.report.total_bits,
                info_cost: rec.info_cost,
                null_bits: rec.report.null_bits,
                footrule_ext: rec.footrule_ext,
                kendall_ext: rec.kendall_ext,
                canberra: rec.canberra,
            })
        })
        .collect()
}

pub fn sweep(args: &SweepArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let a = read_list(&args.file_a)?;
    let b = read_list(&args.file_b)?;
    reject_commas(&args.file_a, &a)?;
    reject_commas(&args.file_b, &b)?;
    let k_max = args.k_max.unwrap_or_else(|| a.len().min(b.len()));
    let rows = sweep_rows(&a, &b, args.k_min, k_max, args.step, &args.flags)?;
    writeln!(out, "{SWEEP_HEADER}")?;
    for row in rows {
        writeln!(out, "{}", row.to_csv())?;
    }
    Ok(())
}

/// One permscan row for the permutation with lexicographic index `index`.
///
/// `info_bits` carries nine decimals: summing `2^-info_bits` over all of
/// `S_n` must come back to 1 within 1e-6, which four decimals cannot hold.
pub fn permscan_row(index: u64, n: usize) -> String {
    let p = unrank(index, n).expect("index below n!");
    let letters: String = p.as_slice().iter().map(|&v| (b'a' + v as u8 - 1) as char).collect();
    let m = perm_measures(&p);
    format!(
        "{index},{letters},{},{},{},{:.9}",
        fmt4(m.footrule),
        fmt4(m.kendall),
        fmt4(m.canberra),
        m.info_bits
    )
}

const PERMSCAN_BATCH: u64 = 1 << 16;

pub fn permscan(args: &PermscanArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let n = args.n;
    if !(2..=10).contains(&n) {
        return Err(CliError::NOutOfRange(n));
    }
    let total: u64 = (1..=n as u64).product();
    writeln!(out, "{PERMSCAN_HEADER}")?;
    let mut start = 0;
    while start < total {
        let end = (start + PERMSCAN_BATCH).min(total);
        let rows: Vec<String> = (start..end).into_par_iter().map(|i| permscan_row(i, n)).collect();
        for row in rows {
            writeln!(out, "{row}")?;
        }
        start = end;
    }
    Ok(())
}

pub fn matrix(args: &MatrixArgs, out: &mut dyn Write) -> Result<(), CliError> {
    if args.files.len() < 2 {
        return Err(CliError::TooFewLists);
    }
    let mut names = Vec::with_capacity(args.files.len());
    let mut lists = Vec::with_capacity(args.files.len());
    for path in &args.files {
        let name = path
            .file_name()
            .map_or_else(|| path.display().to_string(), |n| n.to_string_lossy().into_owned());
        if name.contains(',') {
            return Err(CliError::CommaInName(name));
        }
        let list = read_list(path)?;
        reject_commas(path, &list)?;
        names.push(name);
        lists.push(list);
    }
    let k = args.k.unwrap_or_else(|| lists.iter().map(RankedList::len).min().unwrap_or(0));
    let lists = lists.iter().map(|l| top_k(l, k)).collect::<Result<Vec<_>, _>>()?;

    let domain = args.flags.domain();
    let opts = args.flags.options();
    let kendall = args.flags.kendall()?;
    let entry = |t1: &RankedList, t2: &RankedList| -> Result<f64, CliError> {
        Ok(match args.measure {
            MeasureKind::Info => info_total(t1, t2, domain, opts)?.total_bits,
            MeasureKind::Footrule => footrule_ext(t1, t2)?,
            MeasureKind::Kendall => kendall_ext(t1, t2, kendall)?,
            MeasureKind::Canberra => canberra_topk(t1, t2)?,
        })
    };
    let rows = lists
        .par_iter()
        .map(|t1| lists.iter().map(|t2| entry(t1, t2)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;

    writeln!(out, "list,{}", names.join(","))?;
    for (name, row) in names.iter().zip(rows) {
        let cells: Vec<String> = row.into_iter().map(fmt4).collect();
        writeln!(out, "{name},{}", cells.join(","))?;
    }
    Ok(())
}
