//! Shared fixtures and independent oracles used by the test suites: a
//! breadth-first edit-graph distance oracle, random tree and method
//! generators, and builders for mock model scenarios.
//!
//! Everything here is deliberately written against the public data types
//! only, without reusing the algorithms under test.

mod bfs;
mod methods;
mod scenarios;
mod trees;

pub use bfs::bfs_distance;
pub use methods::{random_method, MethodGenConfig};
pub use scenarios::{
    closed_form_method, fragment_scenario, scripted_oracle, FragmentScenario, ScenarioConfig,
};
pub use trees::{mutate_tree, random_tree, TreeGenConfig};

/// A method in the shape of the running two-parameter save-to-file example:
/// a try block of stream calls with a logging call in the catch arm.
pub const SAVE_BITMAP_SRC: &str = "void saveBitmapToFile(Bitmap bmp, File file) {
    try {
        BufferedOutputStream bos = new BufferedOutputStream(new FileOutputStream(file));
        bmp.compress(Bitmap.CompressFormat.JPEG, 90, bos);
        bos.flush();
        bos.close();
        Log.d(TAG, \"save to file succeeded\");
    } catch (Exception e) {
        Log.e(TAG, \"failed to save frame\", e);
    }
}
";
