#pragma once

#include "liepca/basis.hpp"
#include "liepca/complexity.hpp"
#include "liepca/density.hpp"
#include "liepca/eigen.hpp"
#include "liepca/experiment.hpp"
#include "liepca/expm.hpp"
#include "liepca/lie_operator.hpp"
#include "liepca/manifold.hpp"
#include "liepca/matrix.hpp"
#include "liepca/metrics.hpp"
#include "liepca/pointcloud.hpp"
#include "liepca/rng.hpp"
#include "liepca/serialize.hpp"
#include "liepca/subspace.hpp"
#include "liepca/svg.hpp"
#include "liepca/tangent.hpp"
