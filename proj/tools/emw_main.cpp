#include <string>

#include <CLI11.hpp>

#include "emw/cli_commands.h"

int main(int argc, char** argv) {
    CLI::App app{"emw: matrix-valued electromagnetic wavelet toolkit"};
    app.require_subcommand(1);

    // mother
    double r_max = 6.0, t_min = -5.0, t_max = 5.0;
    int nr = 121, nt = 101;
    std::string mother_out = "mother.csv";
    CLI::App* mother = app.add_subcommand(
        "mother", "Tabulate the scalar mother wavelet on an (r,t) grid");
    mother->add_option("--r-max", r_max, "radial extent")->check(CLI::PositiveNumber);
    mother->add_option("--t-min", t_min, "start of the time window");
    mother->add_option("--t-max", t_max, "end of the time window");
    mother->add_option("--nr", nr, "radial sample count");
    mother->add_option("--nt", nt, "time sample count");
    mother->add_option("--out", mother_out, "output CSV path");

    // verify
    std::string tier = "fast";
    double tol_override = 0.0;
    bool tamper = false;
    std::string verify_out;
    CLI::App* verify =
        app.add_subcommand("verify", "Run the built-in consistency checks");
    verify->add_option("--tier", tier, "check tier: fast or full");
    verify->add_option("--tol", tol_override,
                       "override every check tolerance with this value");
    verify->add_option("--out", verify_out, "write a JSON report here");
    verify->add_flag("--tamper", tamper)->group("");

    // synthesize
    std::string phi_path, probes_path, synth_out = "synthesis.json";
    CLI::App* synth = app.add_subcommand(
        "synthesize", "Evaluate the field reconstructed from wavelet samples");
    synth->add_option("--phi", phi_path, "wavelet sample JSON")->required();
    synth->add_option("--probes", probes_path, "probe point JSON")->required();
    synth->add_option("--out", synth_out, "output JSON path");

    // analyze
    std::string f_path, grid_path, analyze_out = "samples.json";
    CLI::App* analyze = app.add_subcommand(
        "analyze", "Sample a solution's wavelet coefficients on a label grid");
    analyze->add_option("--field", f_path, "cone coefficient JSON")->required();
    analyze->add_option("--grid", grid_path, "label grid JSON")->required();
    analyze->add_option("--out", analyze_out, "output JSON path");

    // transform
    std::string tgrid_path, boost_json, transform_out = "labels.json";
    double scale = 0.0;  // 0 = not given; any valid dilation is positive
    CLI::App* transform = app.add_subcommand(
        "transform", "Apply a conformal map to a label grid");
    transform->add_option("--grid", tgrid_path, "label grid JSON")->required();
    transform->add_option("--boost", boost_json,
                          "boost velocity as JSON, e.g. {\"v\":[0.3,0,0]}");
    transform->add_option("--scale", scale, "positive dilation factor");
    transform->add_option("--out", transform_out, "output JSON path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? emw::kOk : emw::kValidation;
    }

    if (mother->parsed())
        return emw::cmd_mother(r_max, t_min, t_max, nr, nt, mother_out);
    if (verify->parsed())
        return emw::cmd_verify(tier, tol_override, tamper, verify_out);
    if (synth->parsed())
        return emw::cmd_synthesize(phi_path, probes_path, synth_out);
    if (analyze->parsed())
        return emw::cmd_analyze(f_path, grid_path, analyze_out);
    if (transform->parsed())
        return emw::cmd_transform(tgrid_path, boost_json, scale, transform_out);
    return emw::kValidation;
}
