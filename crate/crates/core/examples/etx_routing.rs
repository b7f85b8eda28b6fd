//! ETX routing tree on a generated topology: depth histogram and the
//! packet load each transceiver forwards.

use wsn_schedex::bench::Instance;
use wsn_schedex::channel::ChannelParams;
use wsn_schedex::model::validate_routing;
use wsn_schedex::routing::hop_depths;

fn main() -> wsn_schedex::Result<()> {
    let inst = Instance::generate(50, 3, &ChannelParams::default())?;
    let (net, r) = (&inst.network, &inst.routing);
    assert!(validate_routing(r, net, &inst.quality)?.is_empty());

    let depth = hop_depths(r, net)?;
    let max = net
        .transceivers()
        .iter()
        .map(|t| depth[t.0])
        .max()
        .unwrap_or(0);
    for d in 1..=max {
        let count = net
            .transceivers()
            .iter()
            .filter(|t| depth[t.0] == d)
            .count();
        println!("depth {d:>2}: {}", "#".repeat(count));
    }
    let busiest = net
        .transceivers()
        .iter()
        .max_by_key(|&&t| r.packet_load(t))
        .unwrap();
    println!(
        "busiest forwarder {busiest} carries {} packets to {}",
        r.packet_load(*busiest),
        r.parent(*busiest).unwrap()
    );
    Ok(())
}
