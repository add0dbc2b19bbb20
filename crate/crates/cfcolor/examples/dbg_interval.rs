use cfcolor::classes::geom::interval_graph;
use cfcolor::generators;
use cfcolor::io;

fn main() {
    let scene = generators::random_connected_intervals(35, 11, 31, true);
    let g = interval_graph(&scene).unwrap();
    let n = scene.len();
    let mut assigned: Vec<Option<u32>> = vec![None; n];
    let mut prev_pair: Option<(usize, usize)> = None;
    loop {
        let Some(i1) = (0..n).filter(|&v| assigned[v].is_none())
            .min_by(|&a, &b| scene.left(a).cmp(scene.left(b)).then(a.cmp(&b))) else { break };
        let i2 = g.neighbors(i1).iter().copied()
            .filter(|&v| assigned[v].is_none())
            .max_by(|&a, &b| scene.left(a).cmp(scene.left(b)).then(b.cmp(&a)));
        match i2 {
            Some(i2) => {
                println!("pair ({i1}, {i2})  [{}..{}] [{}..{}]",
                    io::format_rational(scene.left(i1)), io::format_rational(scene.right(i1)),
                    io::format_rational(scene.left(i2)), io::format_rational(scene.right(i2)));
                assigned[i1] = Some(1);
                assigned[i2] = Some(2);
                for &w in g.neighbors(i1).iter().chain(g.neighbors(i2)) {
                    if assigned[w].is_none() { assigned[w] = Some(0); }
                }
                prev_pair = Some((i1, i2));
            }
            None => {
                println!("STRANDED x={i1} [{}..{}]  prev_pair={prev_pair:?}",
                    io::format_rational(scene.left(i1)), io::format_rational(scene.right(i1)));
                println!("neighbors of x:");
                for &m in g.neighbors(i1) {
                    println!("  {m} [{}..{}] = {:?}, N({m}) colors: {:?}",
                        io::format_rational(scene.left(m)), io::format_rational(scene.right(m)),
                        assigned[m],
                        g.neighbors(m).iter().map(|&w| (w, assigned[w])).collect::<Vec<_>>());
                }
                let unassigned: Vec<usize> = (0..n).filter(|&v| assigned[v].is_none()).collect();
                println!("unassigned now: {unassigned:?}");
                return;
            }
        }
    }
}
