//! Box merging works on integer point sets of any dimension, not only
//! images. Three classic sets with dimensions known in closed form:
//!
//! * Sierpinski triangle: `x & y == 0` on a 2^k grid, D = log2 3
//! * 3-D analogue: pairwise disjoint bit patterns, D = log2 4 = 2
//! * a diagonal in 7 dimensions, D = 1

use boxmerge::{estimate_dimension, AxisSpec, FitConfig, PointSet};

fn main() -> Result<(), boxmerge::Error> {
    let config = FitConfig::new(1.0)?;
    let side = 1u32 << 9;

    let triangle = PointSet::new(
        vec![AxisSpec::new(side)?; 2],
        (0..side).flat_map(|x| (0..side).filter(move |y| x & y == 0).map(move |y| [x, y])),
    )?;
    report("sierpinski triangle", &triangle, 3f64.log2(), &config)?;

    let side3 = 1u32 << 7;
    let mut points = Vec::new();
    for x in 0..side3 {
        for y in 0..side3 {
            for z in 0..side3 {
                if x & y == 0 && y & z == 0 && x & z == 0 {
                    points.push([x, y, z]);
                }
            }
        }
    }
    let tetra = PointSet::new(vec![AxisSpec::new(side3)?; 3], points)?;
    report("disjoint-bit tetrahedron", &tetra, 2.0, &config)?;

    let diagonal = PointSet::new(vec![AxisSpec::new(1024)?; 7], (0..1024).map(|i| [i; 7]))?;
    report("7-D diagonal", &diagonal, 1.0, &config)?;
    Ok(())
}

fn report(
    name: &str,
    ps: &PointSet,
    exact: f64,
    config: &FitConfig,
) -> Result<(), boxmerge::Error> {
    let est = estimate_dimension(ps, config)?;
    println!(
        "{name:<26} E={} points={:<7} D={:.6} exact={exact:.6}",
        ps.dim(),
        ps.len(),
        est.dimension
    );
    Ok(())
}
