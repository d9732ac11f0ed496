#pragma once

#include "wright/airy.hpp"
#include "wright/brent.hpp"
#include "wright/closed_forms.hpp"
#include "wright/contour.hpp"
#include "wright/eval.hpp"
#include "wright/fft.hpp"
#include "wright/gamma.hpp"
#include "wright/grid.hpp"
#include "wright/pde.hpp"
#include "wright/quadrature.hpp"
#include "wright/selector.hpp"
#include "wright/series.hpp"
#include "wright/types.hpp"
