#pragma once

#include "z2ss/charts.hpp"
#include "z2ss/errors.hpp"
#include "z2ss/ground.hpp"
#include "z2ss/json_io.hpp"
#include "z2ss/mackey.hpp"
#include "z2ss/render.hpp"
#include "z2ss/serre.hpp"
#include "z2ss/spaces.hpp"
#include "z2ss/spectra.hpp"
#include "z2ss/verify.hpp"
