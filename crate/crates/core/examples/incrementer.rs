//! Greedy slot repetition: grows a plain frame until it meets a demand and
//! compares the result to the SchedEx frame for the same demand.

use wsn_schedex::bench::Instance;
use wsn_schedex::channel::ChannelParams;
use wsn_schedex::incrementer::{increment_until, AttributedFrame};
use wsn_schedex::model::{BufferState, PlainPolicy};
use wsn_schedex::schedex::{schedex_schedule, ReliabilityBound};
use wsn_schedex::scheduling::{run_scheduler, SchedulerKind};

fn main() -> wsn_schedex::Result<()> {
    let inst = Instance::generate(50, 1, &ChannelParams::default())?;
    let (net, q, r) = (&inst.network, &inst.quality, &inst.routing);
    let base = run_scheduler(
        SchedulerKind::NodeBased,
        net,
        q,
        r,
        &BufferState::ones(net),
        &mut PlainPolicy,
    )?;
    let mut frame = AttributedFrame::new(base, q)?;
    println!(
        "plain frame: {} slots, reliability {:.3e}",
        frame.len(),
        frame.reliability()
    );

    // a few steps by hand
    for _ in 0..5 {
        let s = frame.best_repeat().expect("nonempty frame");
        frame.repeat_slot(s);
        println!(
            "  repeat slot {s:>3} -> reliability {:.3e}",
            frame.reliability()
        );
    }

    for rho in [0.9, 0.999, 0.99999] {
        let bound = ReliabilityBound::new(rho)?;
        let grown = increment_until(frame.clone(), bound, 100_000)?;
        let sx = schedex_schedule(SchedulerKind::NodeBased, net, q, r, bound)?;
        println!(
            "rho {rho:<7}: incrementer {:>5} slots ({:.6}), schedex {:>5} slots, ratio {:.3}",
            grown.len(),
            grown.reliability(),
            sx.len(),
            sx.len() as f64 / grown.len() as f64
        );
    }
    Ok(())
}
