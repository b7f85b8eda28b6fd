//! Monte-Carlo replay of SchedEx frames against their analytic bound.

use wsn_schedex::bench::Instance;
use wsn_schedex::channel::ChannelParams;
use wsn_schedex::model::BufferState;
use wsn_schedex::oracle::{analytic_bound, simulate_frame};
use wsn_schedex::schedex::{schedex_plan, ReliabilityBound};
use wsn_schedex::scheduling::SchedulerKind;

fn main() -> wsn_schedex::Result<()> {
    let inst = Instance::generate(50, 2, &ChannelParams::default())?;
    let (net, q, r) = (&inst.network, &inst.quality, &inst.routing);
    let b0 = BufferState::ones(net);
    for kind in SchedulerKind::ALL {
        for rho in [0.9, 0.999] {
            let plan = schedex_plan(kind, net, q, r, ReliabilityBound::new(rho)?)?;
            let bound = analytic_bound(
                &plan.repetitions,
                q,
                &plan.routing,
                plan.routing.packet_loads(),
            )?;
            let sim = simulate_frame(&plan.frame, &plan.routing, net, q, &b0, 100_000, 42)?;
            println!(
                "{kind:>9} rho {rho:<5}: bound {bound:.5}, empirical {:.5} [{:.5}, {:.5}]",
                sim.rate, sim.ci_low, sim.ci_high
            );
        }
    }
    Ok(())
}
