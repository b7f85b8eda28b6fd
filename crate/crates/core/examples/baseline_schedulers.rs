//! The four plain schedulers (one attempt per hop) on the same network.

use wsn_schedex::bench::Instance;
use wsn_schedex::channel::ChannelParams;
use wsn_schedex::incrementer::exact_reliability;
use wsn_schedex::model::{validate_schedule, BufferState, PlainPolicy};
use wsn_schedex::scheduling::{build_conflict_graph, run_scheduler, SchedulerKind};

fn main() -> wsn_schedex::Result<()> {
    let inst = Instance::generate(50, 1, &ChannelParams::default())?;
    let (net, q, r) = (&inst.network, &inst.quality, &inst.routing);
    let graph = build_conflict_graph(net, q, r)?;
    println!("conflict graph: {} edges", graph.edge_count());

    let b0 = BufferState::ones(net);
    for kind in SchedulerKind::ALL {
        let frame = run_scheduler(kind, net, q, r, &b0, &mut PlainPolicy)?;
        let report = validate_schedule(&frame, r, q)?;
        println!(
            "{kind:>9}: {:>4} slots, {:>4} transmissions, reliability {:.3e}, {} violations",
            frame.len(),
            frame.transmission_count(),
            exact_reliability(&frame, q)?,
            report.len()
        );
    }
    Ok(())
}
