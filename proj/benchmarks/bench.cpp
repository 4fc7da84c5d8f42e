// Microbenchmarks for the hot paths: geometry closed forms, mesh
// construction and volume, the design rollup and sweep, the control loop
// and the mission planner.

#include <foldship/config.hpp>
#include <foldship/mesh.hpp>
#include <foldship/pattern.hpp>

#include <benchmark/benchmark.h>

using namespace foldship;

namespace {

const KreslingParams kRef{};

void BM_DeriveSegment(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(derive_segment(kRef, true));
}
BENCHMARK(BM_DeriveSegment);

void BM_FoldState(benchmark::State& state) {
    const SegmentGeometry g = derive_segment(kRef, true);
    const double mid = 0.5 * (g.alpha_deployed + g.alpha_folded);
    for (auto _ : state) benchmark::DoNotOptimize(fold_state(g, kRef, mid));
}
BENCHMARK(BM_FoldState);

void BM_BuildMesh(benchmark::State& state) {
    const SegmentGeometry g = derive_segment(kRef, true);
    for (auto _ : state) benchmark::DoNotOptimize(build_mesh(kRef, g.alpha_deployed));
}
BENCHMARK(BM_BuildMesh);

void BM_EnclosedVolume(benchmark::State& state) {
    const SegmentGeometry g = derive_segment(kRef, true);
    const TriMesh mesh = build_mesh(kRef, g.alpha_deployed);
    for (auto _ : state) benchmark::DoNotOptimize(enclosed_volume(mesh));
}
BENCHMARK(BM_EnclosedVolume);

void BM_EvaluateDesign(benchmark::State& state) {
    const DesignInputs in;
    for (auto _ : state) benchmark::DoNotOptimize(evaluate_design(in));
}
BENCHMARK(BM_EvaluateDesign);

void BM_Unfold(benchmark::State& state) {
    const DesignInputs in;
    for (auto _ : state)
        benchmark::DoNotOptimize(unfold(kRef, in.r_pct, in.t_sheath));
}
BENCHMARK(BM_Unfold);

void BM_SweepSmallGrid(benchmark::State& state) {
    SweepGrid grid;
    grid.n_min = 6;
    grid.n_max = 8;
    grid.m_min = 3;
    grid.m_max = 5;
    grid.lambda_min = 0.80;
    grid.lambda_max = 0.90;
    const DesignInputs in;
    for (auto _ : state)
        benchmark::DoNotOptimize(run_sweep(in, grid, 1));
}
BENCHMARK(BM_SweepSmallGrid);

void BM_ControllerUpdate(benchmark::State& state) {
    AxisController ctrl(AxisGains{}, 40, true);
    ctrl.set_target(1.0);
    double pos = 0.0, vel = 0.01;
    for (auto _ : state) {
        const ControlStep step = ctrl.update(pos, vel);
        benchmark::DoNotOptimize(step.tau_star);
        pos += 1e-6; // keep the inputs moving without re-seeding
    }
}
BENCHMARK(BM_ControllerUpdate);

void BM_RunScenarioShort(benchmark::State& state) {
    Scenario sc;
    sc.duration_s = 5.0;
    Waypoint wp;
    wp.t_s = 0.0;
    wp.target[static_cast<int>(Axis::z)] = 1.0;
    sc.waypoints = {wp};
    std::array<AxisGains, kAxes> gains{};
    gains[static_cast<int>(Axis::z)].v_max = 1.0;
    SimOptions opt;
    opt.sma_window_s = 1.0;
    for (auto _ : state) {
        const SimRun run = run_scenario(sc, PlantParams{}, gains, PowerModel{}, opt);
        benchmark::DoNotOptimize(run.summary.energy_Wh);
    }
}
BENCHMARK(BM_RunScenarioShort);

void BM_MissionEnergy(benchmark::State& state) {
    const PowerModel power;
    for (auto _ : state) benchmark::DoNotOptimize(mission_energy(power, 0.15));
}
BENCHMARK(BM_MissionEnergy);

void BM_MinFeasibleSpeed(benchmark::State& state) {
    const PowerModel power;
    for (auto _ : state) benchmark::DoNotOptimize(min_feasible_speed(power));
}
BENCHMARK(BM_MinFeasibleSpeed);

} // namespace

BENCHMARK_MAIN();
