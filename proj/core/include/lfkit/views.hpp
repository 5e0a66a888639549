#pragma once

#include "lfkit/image.hpp"
#include "lfkit/light_field.hpp"

namespace lfkit {

/// Copies one sub-aperture view out of the light field.
Image extract_view(const LightField4D& lf, ViewIndex idx);

/// The middle perspective image under `policy`.
Image center_view(const LightField4D& lf, const CenterPolicy& policy = {});

} // namespace lfkit
