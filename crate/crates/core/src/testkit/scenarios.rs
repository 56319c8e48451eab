//! Mock-model scenario builders (filled in alongside the oracle module).

pub struct ScenarioConfig;
pub struct FragmentScenario;
pub fn fragment_scenario() {}
pub fn scripted_oracle() {}
pub fn closed_form_method() {}
