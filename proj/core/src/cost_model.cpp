#include "lfkit/cost_model.hpp"

#include <sstream>

#include "lfkit/errors.hpp"

namespace lfkit {

namespace {

void check_layer(const ConvLayerSpec& spec) {
    if (spec.in_channels < 1 || spec.out_channels < 1 || spec.kernel < 1 ||
        spec.stride < 1 || spec.padding < 0) {
        std::ostringstream msg;
        msg << "invalid layer spec: Cin=" << spec.in_channels
            << " Cout=" << spec.out_channels << " K=" << spec.kernel
            << " S=" << spec.stride << " P=" << spec.padding;
        throw ParameterError(msg.str());
    }
}

int out_extent(int in, const ConvLayerSpec& spec) {
    if (in < 1) {
        std::ostringstream msg;
        msg << "input extent " << in << " must be positive";
        throw GeometryError(msg.str());
    }
    const int padded = in + 2 * spec.padding;
    if (padded < spec.kernel) {
        std::ostringstream msg;
        msg << "kernel " << spec.kernel << " larger than padded input "
            << padded << " (in=" << in << ", padding=" << spec.padding << ")";
        throw GeometryError(msg.str());
    }
    return (padded - spec.kernel) / spec.stride + 1;
}

} // namespace

std::pair<int, int> conv_out_dims(int in_h, int in_w, const ConvLayerSpec& spec) {
    check_layer(spec);
    return {out_extent(in_h, spec), out_extent(in_w, spec)};
}

std::uint64_t layer_macs(int in_h, int in_w, const ConvLayerSpec& spec) {
    const auto [out_h, out_w] = conv_out_dims(in_h, in_w, spec);
    return static_cast<std::uint64_t>(out_h) * out_w * spec.out_channels *
           spec.in_channels * spec.kernel * spec.kernel;
}

CostReport pipeline_cost(int in_h, int in_w, int in_channels,
                         std::span<const ConvLayerSpec> layers) {
    CostReport report;
    report.input_h = in_h;
    report.input_w = in_w;
    report.input_channels = in_channels;
    int h = in_h, w = in_w, channels = in_channels;
    for (std::size_t i = 0; i < layers.size(); ++i) {
        const ConvLayerSpec& spec = layers[i];
        if (spec.in_channels != channels) {
            std::ostringstream msg;
            msg << "layer " << i << ": expects " << spec.in_channels
                << " input channels, previous layer provides " << channels;
            throw ParameterError(msg.str());
        }
        LayerCost cost;
        try {
            std::tie(cost.out_h, cost.out_w) = conv_out_dims(h, w, spec);
        } catch (const Error& e) {
            std::ostringstream msg;
            msg << "layer " << i << ": " << e.what();
            throw GeometryError(msg.str());
        }
        cost.macs = static_cast<std::uint64_t>(cost.out_h) * cost.out_w *
                    spec.out_channels * spec.in_channels * spec.kernel *
                    spec.kernel;
        report.total_macs += cost.macs;
        report.layers.push_back(cost);
        h = cost.out_h;
        w = cost.out_w;
        channels = spec.out_channels;
    }
    return report;
}

} // namespace lfkit
