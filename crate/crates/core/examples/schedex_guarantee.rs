//! Repetition vectors and SchedEx frames for a range of demands, with the
//! analytic bound each frame guarantees.

use wsn_schedex::bench::Instance;
use wsn_schedex::channel::ChannelParams;
use wsn_schedex::oracle::analytic_bound;
use wsn_schedex::schedex::{schedex_plan, total_attempts, ReliabilityBound};
use wsn_schedex::scheduling::SchedulerKind;

fn main() -> wsn_schedex::Result<()> {
    let inst = Instance::generate(50, 1, &ChannelParams::default())?;
    let (net, q, r) = (&inst.network, &inst.quality, &inst.routing);
    for rho in [0.9, 0.99, 0.999, 0.9999, 0.99999] {
        let plan = schedex_plan(
            SchedulerKind::NodeBased,
            net,
            q,
            r,
            ReliabilityBound::new(rho)?,
        )?;
        let loads = plan.routing.packet_loads();
        let bound = analytic_bound(&plan.repetitions, q, &plan.routing, loads)?;
        println!(
            "rho {rho:<7}: max tau {}, {:>5} attempts, {:>5} slots, bound {bound:.6}",
            plan.repetitions.max_tau(),
            total_attempts(&plan.repetitions, loads),
            plan.frame.len(),
        );
        assert!(bound >= rho);
    }
    Ok(())
}
