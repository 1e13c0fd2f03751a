#pragma once

#include "common.hpp"
#include "space.hpp"
#include "poly.hpp"
#include "rootfind.hpp"
#include "krawtchouk.hpp"
#include "bounds.hpp"
#include "quadrature.hpp"
#include "potential.hpp"
#include "hermite.hpp"
#include "report.hpp"
#include "ulb.hpp"
#include "refine.hpp"
#include "window.hpp"
#include "asymptotics.hpp"
#include "codes.hpp"
#include "emit.hpp"
