use super::artifact::{Artifact, Cell, Table};
use super::{ChunksArgs, CliError, Extend1dArgs, Extend2dArgs, ShrinkTableArgs, Table1Args};
use crate::diagnostics::{build_f_profile, build_g_profile};
use crate::extend1d::{kappa, Extension1DConfig};
use crate::extend2d::{extend_field, normal_continuity, Extension2D, Grid2, Point2, Region};
use crate::scheme::{condition_number, ExtensionScheme};
use crate::stabilizers::{build_shrink_table, shrink_forward, shrink_psi, WindowSpec};

const KAPPA_PROBES: usize = 4001;
/// First bin of the tail reported by the spectrum metrics.
const TAIL_BIN: usize = 200;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

pub fn cmd_table1(args: &Table1Args) -> Result<Artifact, CliError> {
    if args.n.0.is_empty() || args.a.0.is_empty() {
        return Err(usage("table ranges must be nonempty"));
    }
    if let Some(a) = args.a.0.iter().find(|a| !(**a > 0.0)) {
        return Err(usage(format!("reach a must be positive, got {a}")));
    }
    let mut art = Artifact::new("table1");
    let join = |v: Vec<String>| v.join(" ");
    art.config("n", join(args.n.0.iter().map(|n| n.to_string()).collect()));
    art.config("a", join(args.a.0.iter().map(|a| a.to_string()).collect()));
    let mut t = Table::new("condition_number", &["a", "n", "cond"]);
    for &a in &args.a.0 {
        for &n in &args.n.0 {
            t.push(vec![a.into(), n.into(), condition_number(n, a)?.into()]);
        }
    }
    art.metric("entries", t.rows.len());
    art.table(t);
    Ok(art)
}

fn benchmark_config(n: usize, a: f64, delta: Option<f64>) -> Result<Extension1DConfig, CliError> {
    if !(a > 0.0) {
        return Err(usage(format!("reach a must be positive, got {a}")));
    }
    if let Some(d) = delta {
        if !(d > 0.0 && d <= 1.0) {
            return Err(usage(format!("shrink delta must lie in (0, 1], got {d}")));
        }
    }
    Extension1DConfig::benchmark(n, a, delta).map_err(|e| match e {
        crate::Error::ReachExceeded { .. } => usage(format!(
            "{e}; with M = 0.25 and L = 0.5 this needs a <= 2 unless --shrink-delta is given"
        )),
        other => other.into(),
    })
}

fn benchmark_header(art: &mut Artifact, func: &str, cfg: &Extension1DConfig, delta: Option<f64>) {
    art.config("fn", func)
        .config("n", cfg.scheme().order())
        .config("a", cfg.scheme().reach())
        .config("source", "0,0.5")
        .config("extension", "-0.25,0")
        .config("shrink_delta", delta.map_or(Cell::from("none"), Cell::from));
}

fn spectrum_metrics(art: &mut Artifact, values: &[f64]) -> Result<Table, CliError> {
    let spec = crate::diagnostics::power_spectrum(values)?;
    let mean_square = values.iter().map(|v| v * v).sum::<f64>() / values.len() as f64;
    art.metric("spectrum_peak", spec.peak())
        .metric("spectrum_power", spec.power())
        .metric("profile_mean_square", mean_square);
    if spec.magnitudes.len() > TAIL_BIN {
        art.metric("spectrum_tail_from_bin_200", spec.relative_tail(TAIL_BIN));
    }
    let mut t = Table::new("spectrum", &["bin", "magnitude"]);
    for (k, m) in spec.magnitudes.iter().enumerate() {
        t.push(vec![k.into(), (*m).into()]);
    }
    Ok(t)
}

pub fn cmd_extend1d(args: &Extend1dArgs) -> Result<Artifact, CliError> {
    if args.samples < 2 || args.profile_points < 2 {
        return Err(usage("--samples and --profile-points must be at least 2"));
    }
    let cfg = benchmark_config(args.n, args.a, args.shrink_delta)?;
    let f = |x: f64| args.func.eval(x);
    let mut art = Artifact::new("extend1d");
    benchmark_header(&mut art, &args.func.to_string(), &cfg, args.shrink_delta);
    art.config("samples", args.samples).config("profile_points", args.profile_points);

    let g = build_g_profile(&f, &cfg);
    let (lo, hi) = g.interval();
    let mut profile = Table::new("g_profile", &["x", "value"]);
    for i in 0..args.profile_points {
        let x = lo + (hi - lo) * i as f64 / (args.profile_points - 1) as f64;
        profile.push(vec![x.into(), g.eval(x)?.into()]);
    }
    let chunks = g.chunks()?;
    art.metric("condition_number", cfg.scheme().cond())
        .metric("kappa", kappa(&f, &cfg, KAPPA_PROBES)?)
        .metric("chunks", chunks.len())
        .metric("chunk_coeffs", chunks.coeffs_per_panel())
        .metric("chunk_tol", chunks.tol());
    let fp = build_f_profile(&f, &cfg, args.samples)?;
    let spectrum = spectrum_metrics(&mut art, &fp.values)?;
    art.table(profile).table(spectrum);
    Ok(art)
}

pub fn cmd_spectrum(args: &Extend1dArgs) -> Result<Artifact, CliError> {
    if args.samples < 2 {
        return Err(usage("--samples must be at least 2"));
    }
    let cfg = benchmark_config(args.n, args.a, args.shrink_delta)?;
    let f = |x: f64| args.func.eval(x);
    let mut art = Artifact::new("spectrum");
    benchmark_header(&mut art, &args.func.to_string(), &cfg, args.shrink_delta);
    art.config("samples", args.samples);
    let fp = build_f_profile(&f, &cfg, args.samples)?;
    let spectrum = spectrum_metrics(&mut art, &fp.values)?;
    let mut profile = Table::new("f_profile", &["x", "value"]);
    for (x, v) in fp.xs.iter().zip(&fp.values) {
        profile.push(vec![(*x).into(), (*v).into()]);
    }
    art.table(profile).table(spectrum);
    Ok(art)
}

pub fn cmd_chunks(args: &ChunksArgs) -> Result<Artifact, CliError> {
    if args.k < 8 {
        return Err(usage(format!("--k must be at least 8, got {}", args.k)));
    }
    if !(args.tol > 0.0) {
        return Err(usage(format!("--tol must be positive, got {}", args.tol)));
    }
    let cfg = benchmark_config(args.n, args.a, args.shrink_delta)?;
    let f = |x: f64| args.func.eval(x);
    let mut art = Artifact::new("chunks");
    benchmark_header(&mut art, &args.func.to_string(), &cfg, args.shrink_delta);
    art.config("k", args.k).config("tol", args.tol);
    let set = build_g_profile(&f, &cfg).chunks_with(args.k, args.tol)?;
    art.metric("chunks", set.len()).metric("scale", set.scale());
    let mut t = Table::new("panels", &["left", "right", "tail"]);
    for p in set.panels() {
        t.push(vec![p.left.into(), p.right.into(), p.tail().into()]);
    }
    art.table(t);
    Ok(art)
}

/// A reach too large for the scheme is a parameter choice, so it exits like a usage error.
fn reach_hint(e: crate::Error) -> CliError {
    match e {
        crate::Error::SampleOutsideDomain { .. } => usage(format!("{e}; lower --reach or --a")),
        other => other.into(),
    }
}

pub fn cmd_extend2d(args: &Extend2dArgs) -> Result<Artifact, CliError> {
    if args.probes == 0 {
        return Err(usage("--probes must be positive"));
    }
    let curve = args.curve.build().map_err(usage)?;
    let scheme = ExtensionScheme::optimal(args.n, args.a)?;
    let window = match args.window {
        Some(w) => Some(WindowSpec::new(w.0, w.1).map_err(|e| usage(e.to_string()))?),
        None => None,
    };
    let reach = args.reach.unwrap_or_else(|| curve.default_reach());
    let (bx, by) = match args.bbox {
        Some(b) => (b.x, b.y),
        None => {
            let (lo, hi) = curve.bounding_box();
            let (hx, hy) = (0.5 * (hi.x - lo.x), 0.5 * (hi.y - lo.y));
            let (cx, cy) = (0.5 * (hi.x + lo.x), 0.5 * (hi.y + lo.y));
            ((cx - 1.5 * hx, cx + 1.5 * hx), (cy - 1.5 * hy, cy + 1.5 * hy))
        }
    };
    let ext = Extension2D::new(curve, scheme, reach, window).map_err(|e| usage(e.to_string()))?;
    let grid = Grid2::new(args.grid.nx, args.grid.ny, bx, by)?;

    let f = |p: Point2| args.func.eval(p);
    let field = extend_field(&f, &ext, &grid).map_err(reach_hint)?;
    let report = normal_continuity(&ext, &f, args.probes).map_err(reach_hint)?;

    let mut art = Artifact::new("extend2d");
    art.config("curve", format!("{:?}", args.curve))
        .config("fn", format!("{:?}", args.func))
        .config("n", args.n)
        .config("a", args.a)
        .config("reach", reach)
        .config("grid", format!("{}x{}", grid.nx, grid.ny))
        .config("box", format!("{},{},{},{}", bx.0, bx.1, by.0, by.1))
        .config("window", args.window.map_or("none".to_string(), |w| format!("{},{}", w.0, w.1)))
        .config("probes", args.probes);

    let tube = field.regions.iter().filter(|r| **r == Region::Tube).count();
    art.metric("condition_number", ext.scheme().cond())
        .metric("max_curvature", ext.curve().max_curvature())
        .metric("tube_points", tube)
        .metric("continuity_passes", report.passes())
        .metric("max_mismatch", report.max_mismatch());
    if let Some(p) = args.func.polynomial() {
        let mut err: f64 = 0.0;
        for (i, r) in field.regions.iter().enumerate() {
            if *r == Region::Tube {
                let q = grid.point(i);
                err = err.max((field.values[i] - p.eval(q.x, q.y)).abs());
            }
        }
        art.metric("poly_degree", p.degree() as usize)
            .metric("max_tube_error_vs_polynomial", err);
    }

    let mut ft = Table::new("field", &["x", "y", "region", "value"]);
    for (i, (v, r)) in field.values.iter().zip(&field.regions).enumerate() {
        let q = grid.point(i);
        ft.push(vec![q.x.into(), q.y.into(), r.as_str().into(), (*v).into()]);
    }
    let mut ct = Table::new("continuity", &["order", "mismatch", "scale", "threshold", "worst_ratio"]);
    for o in &report.orders {
        ct.push(vec![
            o.order.into(),
            o.mismatch.into(),
            o.scale.into(),
            o.threshold.into(),
            o.worst_ratio.into(),
        ]);
    }
    art.table(ft).table(ct);
    Ok(art)
}

pub fn cmd_shrink_table(args: &ShrinkTableArgs) -> Result<Artifact, CliError> {
    if args.samples < 2 {
        return Err(usage("--samples must be at least 2"));
    }
    let map = build_shrink_table(args.shrink_delta, args.n, args.tol)?;
    let table = map.table().expect("table was requested");
    let mut art = Artifact::new("shrink-table");
    art.config("shrink_delta", args.shrink_delta)
        .config("n", args.n)
        .config("tol", args.tol)
        .config("samples", args.samples);

    let mut samples = Table::new("samples", &["x", "psi_table", "psi_root", "roundtrip_residual"]);
    let (mut max_err, mut max_res): (f64, f64) = (0.0, 0.0);
    for i in 0..args.samples {
        let x = i as f64 / (args.samples - 1) as f64;
        let tab = map.psi(x)?;
        let root = shrink_psi(x, args.shrink_delta, args.n)?;
        let res = (shrink_forward(root, args.shrink_delta, args.n)? - x).abs();
        max_err = max_err.max((tab - root).abs());
        max_res = max_res.max(res);
        samples.push(vec![x.into(), tab.into(), root.into(), res.into()]);
    }
    art.metric("panels", table.len())
        .metric("max_table_error", max_err)
        .metric("max_roundtrip_residual", max_res);
    let mut panels = Table::new("panels", &["left", "right", "tail"]);
    for p in table.panels() {
        panels.push(vec![p.left.into(), p.right.into(), p.tail().into()]);
    }
    art.table(panels).table(samples);
    Ok(art)
}
