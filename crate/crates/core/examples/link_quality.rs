//! Link reception rate against distance for both reference SNRs.

use wsn_schedex::channel::{ChannelModel, ChannelParams};

fn main() -> wsn_schedex::Result<()> {
    for db in [60.0, 50.0] {
        let model = ChannelModel::new(ChannelParams::default().with_snr_db(db))?;
        println!(
            "gamma0 = {db} dB, reference distance {:.3}",
            model.reference_distance()
        );
        for d in [1.0, 5.0, 10.0, 15.0, 20.0, 25.0, 30.0, 45.0, 61.0] {
            println!("  d = {d:>4}: prr {:.5}", model.link_prr(d)?);
        }
    }
    Ok(())
}
