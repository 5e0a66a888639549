#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace lfkit {

/// One square convolution layer. Strides and padding apply to both axes.
struct ConvLayerSpec {
    int in_channels = 1;
    int out_channels = 1;
    int kernel = 1;
    int stride = 1;
    int padding = 0;
};

/// Output feature-map size: floor((in + 2P - K) / S) + 1 per axis.
/// Throws GeometryError when the kernel exceeds the padded input.
std::pair<int, int> conv_out_dims(int in_h, int in_w, const ConvLayerSpec& spec);

/// Multiply-accumulate count of one layer: out_h * out_w * Cout * Cin * K^2.
/// Multiplies only; the addition count is roughly the same again.
std::uint64_t layer_macs(int in_h, int in_w, const ConvLayerSpec& spec);

struct LayerCost {
    int out_h = 0;
    int out_w = 0;
    std::uint64_t macs = 0;
};

/// Geometry and MAC totals of a layer stack. Cost depends on the input
/// dimensions alone, never on how the input image was produced.
struct CostReport {
    int input_h = 0;
    int input_w = 0;
    int input_channels = 0;
    std::vector<LayerCost> layers;
    std::uint64_t total_macs = 0;
};

/// Chains conv_out_dims / layer_macs through the stack. Channel mismatches
/// and geometry failures report the offending layer index.
CostReport pipeline_cost(int in_h, int in_w, int in_channels,
                         std::span<const ConvLayerSpec> layers);

} // namespace lfkit
