//! Emit the two CSV plot windows of the locus curve (the main view and the
//! magnified view near the origin), with the double point marked.
//!
//! Run with: cargo run --example plot_figures
//! Output:   locus_main.csv, locus_zoom.csv in the working directory

use nodal_families::dualcurve::{
    default_windows, emit_plot, example_a, find_double_points, plot_to_csv, torus_locus,
};

fn main() {
    let curve = torus_locus(&example_a()).unwrap();
    let marked: Vec<f64> = find_double_points(&curve, 1e-9)
        .iter()
        .flat_map(|d| [d.t1, d.t2])
        .collect();
    for window in default_windows() {
        let rows = emit_plot(&curve, &window, &marked);
        let path = format!("locus_{}.csv", window.name);
        std::fs::write(&path, plot_to_csv(&rows)).expect("write csv");
        let segments = rows.iter().map(|r| r.segment_id).max().map(|m| m + 1).unwrap_or(0);
        println!(
            "{path}: {} samples in {} segments, s in [{}, {}], alpha product in [{}, {}]",
            rows.len(),
            segments,
            window.s_range.0,
            window.s_range.1,
            window.a_range.0,
            window.a_range.1
        );
    }
}
