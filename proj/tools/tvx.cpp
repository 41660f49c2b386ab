#include <CLI11.hpp>

#include "tvx/jobs.hpp"

int main(int argc, char** argv) {
    CLI::App app{"rank-2 generalized cluster scattering diagrams, exact"};
    app.require_subcommand(1);

    tvx::JobSpec job;
    job.threads = tvx::default_thread_count();

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--order", job.order, "truncation order");
        sub->add_option("--out", job.out_path, "output file (default: stdout)");
        sub->add_option("--format", job.format, "json|csv|text|svg");
        sub->add_option("--threads", job.threads, "worker threads");
    };
    auto add_initial = [&](CLI::App* sub) {
        sub->add_option("--p1", job.p1, "initial wall function on the x-axis, e.g. \"1+p[1,1]*x\"");
        sub->add_option("--p2", job.p2, "initial wall function on the y-axis, e.g. \"1+p[2,1]*y\"");
    };

    CLI::App* wallfn = app.add_subcommand("wallfn", "wall function on one ray");
    wallfn->add_option("--a", job.a)->required();
    wallfn->add_option("--b", job.b)->required();
    wallfn->add_option("--method", job.method, "tight|oracle");
    wallfn->add_flag("--gradings", job.with_gradings, "include the tight gradings per order");
    add_initial(wallfn);
    add_common(wallfn);

    CLI::App* scatter = app.add_subcommand("scatter", "complete scattering diagram");
    scatter->add_option("--method", job.method, "tight|oracle");
    scatter->add_option("--line", job.extra_lines, "extra initial line \"a,b:expr\"");
    add_initial(scatter);
    add_common(scatter);

    CLI::App* greedy = app.add_subcommand("greedy", "greedy element x[a1,a2]");
    greedy->add_option("--a1", job.a1)->required();
    greedy->add_option("--a2", job.a2)->required();
    greedy->add_option("--l1", job.ell1, "symbolic exchange degree 1");
    greedy->add_option("--l2", job.ell2, "symbolic exchange degree 2");
    add_initial(greedy);
    add_common(greedy);

    CLI::App* theta = app.add_subcommand("theta", "theta function by broken lines");
    theta->add_option("--m0x", job.m0x)->required();
    theta->add_option("--m0y", job.m0y)->required();
    theta->add_option("--qx", job.qx, "endpoint x (rational)");
    theta->add_option("--qy", job.qy, "endpoint y (rational)");
    theta->add_flag("--lines", job.with_lines, "include the broken-line dumps");
    add_initial(theta);
    add_common(theta);

    CLI::App* clustervar = app.add_subcommand("clustervar", "cluster (pre-)variable");
    clustervar->add_option("--k", job.k)->required();
    clustervar->add_option("--l1", job.ell1);
    clustervar->add_option("--l2", job.ell2);
    add_initial(clustervar);
    add_common(clustervar);

    CLI::App* gw = app.add_subcommand("gw", "log-invariants of one wall function");
    gw->add_option("--a", job.a)->required();
    gw->add_option("--b", job.b)->required();
    gw->add_option("--l1", job.ell1)->required();
    gw->add_option("--l2", job.ell2)->required();
    add_common(gw);

    CLI::App* check = app.add_subcommand("check", "formula vs completion, consistency, positivity");
    add_initial(check);
    add_common(check);

    CLI::App* render = app.add_subcommand("render", "SVG of a grading tiling or a ray diagram");
    render->add_option("--kind", job.kind, "grading|diagram")->required();
    render->add_option("--m", job.m);
    render->add_option("--n", job.n);
    render->add_option("--horiz", job.horiz, "comma-separated horizontal values");
    render->add_option("--vert", job.vert, "comma-separated vertical values");
    render->add_option("--method", job.method, "tight|oracle");
    add_initial(render);
    add_common(render);

    CLI11_PARSE(app, argc, argv);
    job.command = app.get_subcommands().front()->get_name();
    if (job.command == "gw" && job.format == "json" && gw->count("--format") == 0) job.format = "csv";
    return tvx::run_job(job);
}
