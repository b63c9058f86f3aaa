#pragma once

#include "neutro/core.hpp"
#include "neutro/set_algebra.hpp"
#include "neutro/similarity.hpp"
#include "neutro/decision.hpp"
#include "neutro/consistency.hpp"
