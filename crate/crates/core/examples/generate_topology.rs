//! Draws a seeded topology, prints its shape and saves it as a scenario file.
//!
//! cargo run --example generate_topology -- [size] [seed] [out.json]

use wsn_schedex::channel::{generate_topology, save_scenario, ChannelParams, TopologyParams};

fn main() -> wsn_schedex::Result<()> {
    let mut args = std::env::args().skip(1);
    let n = args.next().and_then(|a| a.parse().ok()).unwrap_or(50);
    let seed = args.next().and_then(|a| a.parse().ok()).unwrap_or(1);
    let tp = TopologyParams::new(n, seed);
    let cp = ChannelParams::default();
    let (net, q) = generate_topology(&tp, &cp)?;

    let center = net.position(net.sinks()[0]);
    let inner = net
        .transceivers()
        .iter()
        .filter(|&&t| net.position(t).distance(&center) <= tp.inner_radius)
        .count();
    let links: usize = net
        .transceivers()
        .iter()
        .map(|&t| net.node_ids().filter(|&p| q.get(t, p) > 0.01).count())
        .sum();
    println!("{} transceivers, {} inner, {} outer", n, inner, n - inner);
    println!(
        "{:.2} usable links per transceiver",
        links as f64 / n as f64
    );

    if let Some(path) = args.next() {
        save_scenario(&path, &net, &q, &cp, &tp)?;
        println!("saved to {path}");
    }
    Ok(())
}
